#include "spexlab/report.hpp"

#include <iomanip>
#include <sstream>

#include "spexlab/errors.hpp"

namespace spexlab {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string cell(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return fmt_double(v.get<double>());
  return v.dump();
}

std::string render_rows(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows, Format format) {
  std::ostringstream os;
  if (format == Format::csv) {
    for (size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << header[c];
    os << "\n";
    for (auto& row : rows) {
      for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
      os << "\n";
    }
    return os.str();
  }
  std::vector<size_t> width(header.size());
  for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& row) {
    for (size_t c = 0; c < row.size(); ++c)
      os << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << row[c];
    os << "\n";
  };
  line(header);
  for (auto& row : rows) line(row);
  return os.str();
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  fail(errc::parse_error, "unknown format: " + name);
}

json family_json(const IsoClassSet& family) {
  json arr = json::array();
  for (auto& [form, g] : family) arr.push_back(form);
  return arr;
}

json graph_json(const Graph& g) { return canonical_form(g); }

json block_model_json(const BlockModel& bm) {
  json link = json::array();
  for (auto& row : bm.link) {
    json r = json::array();
    for (auto v : row) r.push_back(static_cast<int>(v));
    link.push_back(r);
  }
  return json{{"sizes", bm.sizes}, {"link", link}};
}

json profile_json(const ParamProfile& profile) {
  json u = json::array();
  for (VertexSet mask : profile.u_sets) {
    json verts = json::array();
    for_each_vertex(mask, [&](int v) { verts.push_back(v); });
    u.push_back(verts);
  }
  return json{{"schema", "v1"},
              {"F", canonical_form(profile.stripped)},
              {"chi", profile.chi},
              {"lemma_applicable", profile.lemma_applicable},
              {"beta", profile.beta},
              {"q", profile.q},
              {"mu", profile.mu},
              {"lambda", profile.lambda},
              {"M", family_json(profile.family)},
              {"M_star", family_json(profile.bipartite)},
              {"B", family_json(profile.b_family)},
              {"U", u}};
}

json oracle_json(const OracleResult& oracle) {
  return json{{"schema", "v1"},
              {"family", family_json(oracle.family)},
              {"t_max", oracle.t_max},
              {"max_vertices", oracle.max_vertices},
              {"candidates", oracle.candidates}};
}

json construction_json(const ConstructionFamily& fam) {
  json members = json::array();
  for (const AnyGraph& m : fam.members) {
    if (std::holds_alternative<Graph>(m))
      members.push_back(json{{"type", "graph6"}, {"value", graph_json(std::get<Graph>(m))}});
    else
      members.push_back(json{{"type", "block"}, {"value", block_model_json(std::get<BlockModel>(m))}});
  }
  return json{{"schema", "v1"},
              {"n", fam.n},
              {"p", fam.p},
              {"q", fam.q},
              {"d", fam.d},
              {"q_part_edges", fam.q_part_edges},
              {"d_part_edges", fam.d_part_edges},
              {"edge_count", fam.edge_count},
              {"q_choices", family_json(fam.q_choices)},
              {"d_choices", family_json(fam.d_choices)},
              {"members", members}};
}

json spectral_json(const SpectralResult& r, bool verbose) {
  json out{{"schema", "v1"},
           {"rho", r.rho},
           {"residual", r.residual},
           {"iterations", r.iterations}};
  if (verbose) out["perron"] = r.perron;
  return out;
}

json report_json(const SearchReport& rep) {
  json out{{"schema", "v1"},
           {"n", rep.n},
           {"p", rep.p},
           {"F", rep.f},
           {"ex", rep.ex_value ? json(*rep.ex_value) : json()},
           {"EX", family_json(rep.ex_classes)},
           {"spex", rep.spex_value ? json(*rep.spex_value) : json()},
           {"spex_residual", rep.spex_value ? json(rep.spex_residual) : json()},
           {"SPEX", family_json(rep.spex_classes)},
           {"rho_h_lower", rep.rho_h_lower ? json(*rep.rho_h_lower) : json()},
           {"rho_h_upper", rep.rho_h_upper ? json(*rep.rho_h_upper) : json()},
           {"spex_subset_ex", rep.spex_subset_ex ? json(*rep.spex_subset_ex) : json()},
           {"upper_strict_ok", rep.upper_strict_ok ? json(*rep.upper_strict_ok) : json()},
           {"sandwich_lower_ok", rep.sandwich_lower_ok ? json(*rep.sandwich_lower_ok) : json()},
           {"construction_free_ok", rep.construction_free_ok},
           {"enumerated", rep.enumerated_count},
           {"runtime_seconds", json()}};
  return out;
}

std::string emit_table(const std::vector<SearchReport>& reports, Format format) {
  check(!reports.empty(), errc::invalid_parameters, "nothing to tabulate");
  if (format == Format::json) {
    json rows = json::array();
    for (auto& rep : reports) rows.push_back(report_json(rep));
    return json{{"schema", "v1"}, {"rows", rows}}.dump(2) + "\n";
  }
  std::vector<std::string> header{"n",
                                  "p",
                                  "F",
                                  "ex",
                                  "spex",
                                  "rho_h_lower",
                                  "rho_h_upper",
                                  "spex_subset_ex",
                                  "upper_strict_ok",
                                  "sandwich_lower_ok",
                                  "construction_free_ok",
                                  "enumerated",
                                  "runtime_seconds"};
  std::vector<std::vector<std::string>> rows;
  for (auto& rep : reports) {
    json j = report_json(rep);
    rows.push_back({cell(j["n"]), cell(j["p"]), cell(j["F"]), cell(j["ex"]), cell(j["spex"]),
                    cell(j["rho_h_lower"]), cell(j["rho_h_upper"]), cell(j["spex_subset_ex"]),
                    cell(j["upper_strict_ok"]), cell(j["sandwich_lower_ok"]),
                    cell(j["construction_free_ok"]), cell(j["enumerated"]),
                    fmt_double(rep.runtime_seconds)});
  }
  return render_rows(header, rows, format);
}

std::vector<GoldenRow> golden_rows() {
  auto forms = [](const std::vector<Graph>& gs) {
    std::vector<std::string> out;
    for (auto& g : gs) out.push_back(canonical_form(g));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<GoldenRow> rows;
  auto add = [&](const std::string& name, const Graph& f, int p, int q, int beta, int lambda,
                 int mu, const std::vector<Graph>& b) {
    GoldenRow row;
    row.name = name;
    row.f = f;
    row.p = p;
    row.q = q;
    row.beta = beta;
    row.lambda = lambda;
    row.mu = mu;
    row.b_forms = forms(b);
    rows.push_back(std::move(row));
  };
  add("M_4", matching_graph(2), 3, 2, 2, 1, 1, {complete_graph(2)});
  add("M_6", matching_graph(3), 3, 3, 3, 1, 1, {complete_graph(3)});
  add("S_3", star_graph(3), 3, 1, 1, 2, 1, {complete_graph(1)});
  add("S_4", star_graph(4), 3, 1, 1, 3, 1, {complete_graph(1)});
  add("S_5", star_graph(5), 3, 1, 1, 4, 1, {complete_graph(1)});
  add("P_4", path_graph(4), 6, 2, 2, 1, 2, {complete_graph(2)});
  add("P_5", path_graph(5), 6, 2, 2, 2, 2, {complete_graph(2)});
  add("P_6", path_graph(6), 6, 3, 3, 1, 2, {complete_graph(3)});
  add("P_7", path_graph(7), 6, 3, 3, 2, 2, {complete_graph(3)});
  add("C_4", cycle_graph(4), 6, 2, 2, 2, 2, {complete_graph(2)});
  add("C_5", cycle_graph(5), 6, 3, 3, 1, 2, {complete_graph(3)});
  add("C_6", cycle_graph(6), 6, 3, 3, 2, 2, {complete_graph(3)});
  add("C_7", cycle_graph(7), 6, 4, 4, 1, 2, {complete_graph(4)});
  add("K_3", complete_graph(3), 6, 2, 2, 1, 2, {complete_graph(2)});
  add("K_4", complete_graph(4), 10, 4, 3, 1, 3,
      {disjoint_union(complete_graph(2), complete_graph(1))});
  for (auto& row : rows) {
    row.computed = compute_profile(row.f, row.p);
    row.match = row.computed.q == row.q && row.computed.beta == row.beta &&
                row.computed.lambda == row.lambda && row.computed.mu == row.mu &&
                row.computed.b_family.forms() == row.b_forms;
  }
  return rows;
}

std::string golden_table(const std::vector<GoldenRow>& rows, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (auto& row : rows) {
      arr.push_back(json{{"name", row.name},
                         {"p", row.p},
                         {"computed", profile_json(row.computed)},
                         {"expected",
                          json{{"q", row.q},
                               {"beta", row.beta},
                               {"lambda", row.lambda},
                               {"mu", row.mu},
                               {"B", row.b_forms}}},
                         {"match", row.match}});
    }
    return json{{"schema", "v1"}, {"rows", arr}}.dump(2) + "\n";
  }
  std::vector<std::string> header{"name", "p",  "q",  "q*", "beta", "beta*", "lambda",
                                  "lambda*", "mu", "mu*", "B",  "B*",   "match"};
  auto join_forms = [](const std::vector<std::string>& fs) {
    std::string out;
    for (auto& f : fs) out += (out.empty() ? "" : " ") + f;
    return out;
  };
  std::vector<std::vector<std::string>> body;
  for (auto& row : rows) {
    body.push_back({row.name, std::to_string(row.p), std::to_string(row.computed.q),
                    std::to_string(row.q), std::to_string(row.computed.beta),
                    std::to_string(row.beta), std::to_string(row.computed.lambda),
                    std::to_string(row.lambda), std::to_string(row.computed.mu),
                    std::to_string(row.mu), join_forms(row.computed.b_family.forms()),
                    join_forms(row.b_forms), row.match ? "true" : "false"});
  }
  return render_rows(header, body, format);
}

std::string golden_table(Format format) { return golden_table(golden_rows(), format); }

}  // namespace spexlab
