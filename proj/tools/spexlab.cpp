#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spexlab/blowup.hpp"
#include "spexlab/constructions.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/errors.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/params.hpp"
#include "spexlab/report.hpp"
#include "spexlab/search.hpp"
#include "spexlab/spectral.hpp"

namespace {

using nlohmann::json;
using namespace spexlab;

// graph6 string, or a named token path:t / cycle:t / star:t / matching:t /
// clique:t (star:t is the star on t vertices, matching:t has t edges)
Graph parse_forbidden(const std::string& source) {
  auto colon = source.find(':');
  if (colon == std::string::npos) return from_graph6(source);
  std::string name = source.substr(0, colon);
  int t = 0;
  try {
    size_t used = 0;
    t = std::stoi(source.substr(colon + 1), &used);
    check(used == source.size() - colon - 1, errc::parse_error, "trailing characters");
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::parse_error, "bad token parameter in " + source);
  }
  if (name == "path") return path_graph(t);
  if (name == "cycle") return cycle_graph(t);
  if (name == "star") return star_graph(t);
  if (name == "matching") return matching_graph(t);
  if (name == "clique") return complete_graph(t);
  fail(errc::parse_error, "unknown family token: " + name);
}

int resolve_workers(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("SPEXLAB_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  check(static_cast<bool>(os), errc::invalid_parameters, "cannot open " + out_path);
  os << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge blow-up extremal toolkit"};
  app.require_subcommand(1);

  std::string f_source, graph6_str, format_name = "json", out_path;
  int p = 2;
  long long n = 0;
  long long n_from = 0, n_to = 0;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  int max_n = 9;
  long long iters = 2000;
  int t_max = 3;
  int oracle_max_n = 8;
  int workers_flag = 0;
  int d_override = -1;
  bool use_oracle = false, verbose = false, do_ex = false, do_spex = false, do_climb = false;
  bool allow_n10 = false, start_from_construction = false;

  auto add_common = [&](CLI::App* cmd, bool needs_f) {
    if (needs_f) cmd->add_option("--F", f_source, "forbidden graph (graph6 or name:t)")->required();
    cmd->add_option("--format", format_name, "json|csv|text");
    cmd->add_option("--out", out_path, "write output to a file");
  };

  CLI::App* c_blowup = app.add_subcommand("blowup", "edge blow-up of F");
  add_common(c_blowup, true);
  c_blowup->add_option("--p", p, "clique parameter")->required();

  CLI::App* c_decompose = app.add_subcommand("decompose", "decomposition family of F");
  add_common(c_decompose, true);
  c_decompose->add_option("--p", p)->required();
  c_decompose->add_flag("--oracle", use_oracle, "definition-level search instead of the lemma");
  c_decompose->add_option("--t-max", t_max, "oracle join budget");
  c_decompose->add_option("--max-n", oracle_max_n, "oracle member vertex budget");

  CLI::App* c_params = app.add_subcommand("params", "parameter profile of F");
  add_common(c_params, true);
  c_params->add_option("--p", p)->required();

  CLI::App* c_construct = app.add_subcommand("construct", "candidate extremal graphs");
  add_common(c_construct, true);
  c_construct->add_option("--p", p)->required();
  c_construct->add_option("--n", n, "order of the host")->required();
  c_construct->add_option("--d", d_override, "D-part index (default lambda-1)");

  CLI::App* c_spectral = app.add_subcommand("spectral", "certified spectral radius");
  add_common(c_spectral, false);
  c_spectral->add_option("--graph6", graph6_str, "host graph")->required();
  c_spectral->add_option("--tol", tol, "certification target");
  c_spectral->add_flag("--verbose", verbose, "emit the Perron vector");

  CLI::App* c_search = app.add_subcommand("search", "oracles and hill climbing");
  add_common(c_search, true);
  c_search->add_option("--p", p)->required();
  c_search->add_option("--n", n)->required();
  c_search->add_flag("--ex", do_ex, "exact edge maximum");
  c_search->add_flag("--spex", do_spex, "exact spectral maximum");
  c_search->add_flag("--climb", do_climb, "seeded hill climbing");
  c_search->add_flag("--allow-n10", allow_n10, "permit the 10-vertex spectral oracle");
  c_search->add_flag("--from-construction", start_from_construction,
                     "climb from the candidate construction");
  c_search->add_option("--iters", iters, "climb iterations");
  c_search->add_option("--seed", seed, "climb seed");
  c_search->add_option("--tol", tol);
  c_search->add_option("--workers", workers_flag, "worker threads (0 = auto)");

  CLI::App* c_verify = app.add_subcommand("verify", "verification trail over an n-range");
  add_common(c_verify, true);
  c_verify->add_option("--p", p)->required();
  c_verify->add_option("--n", n, "single order");
  c_verify->add_option("--n-from", n_from);
  c_verify->add_option("--n-to", n_to);
  c_verify->add_option("--tol", tol);
  c_verify->add_option("--workers", workers_flag);

  CLI::App* c_report = app.add_subcommand("report", "named instances vs closed forms");
  add_common(c_report, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  json partial;
  try {
    Format format = parse_format(format_name);
    int workers = resolve_workers(workers_flag);

    if (c_blowup->parsed()) {
      Graph f = parse_forbidden(f_source);
      Graph blow = edge_blowup(strip_isolated(f), p);
      emit(dump(json{{"schema", "v1"},
                     {"graph6", to_graph6(blow)},
                     {"canonical", canonical_form(blow)},
                     {"n", blow.vertex_count()},
                     {"edges", blow.edge_count()}}),
           out_path);
    } else if (c_decompose->parsed()) {
      Graph f = parse_forbidden(f_source);
      if (use_oracle) {
        OracleResult oracle = decomposition_family_oracle(f, p, t_max, oracle_max_n);
        emit(dump(oracle_json(oracle)), out_path);
      } else {
        IsoClassSet family = decomposition_family(f, p);
        emit(dump(json{{"schema", "v1"}, {"family", family_json(family)}}), out_path);
      }
    } else if (c_params->parsed()) {
      Graph f = parse_forbidden(f_source);
      emit(dump(profile_json(compute_profile(f, p))), out_path);
    } else if (c_construct->parsed()) {
      Graph f = parse_forbidden(f_source);
      ParamProfile profile = compute_profile(f, p);
      int d = d_override >= 0 ? d_override : profile.lambda - 1;
      ConstructionFamily fam = build_H_family(n, p, profile.q, d, profile.b_family);
      emit(dump(construction_json(fam)), out_path);
    } else if (c_spectral->parsed()) {
      SpectralResult r = spectral_radius(from_graph6(graph6_str), tol);
      emit(dump(spectral_json(r, verbose)), out_path);
    } else if (c_search->parsed()) {
      check(do_ex || do_spex || do_climb, errc::invalid_parameters,
            "pick at least one of --ex, --spex, --climb");
      Graph f = parse_forbidden(f_source);
      json out{{"schema", "v1"}};
      if (do_ex) {
        ExResult ex = ex_bruteforce(static_cast<int>(n), f, p);
        partial["ex"] = json{{"value", ex.max_edges},
                             {"classes", family_json(ex.classes)},
                             {"enumerated", ex.enumerated}};
        out["ex"] = partial["ex"];
      }
      if (do_spex) {
        SpexResult spex =
            spex_bruteforce(static_cast<int>(n), f, p, tol, allow_n10, workers);
        partial["spex"] = json{{"value", spex.value},
                               {"residual", spex.residual},
                               {"classes", family_json(spex.classes)},
                               {"enumerated", spex.enumerated}};
        out["spex"] = partial["spex"];
      }
      if (do_climb) {
        std::optional<Graph> start;
        if (start_from_construction) {
          ParamProfile profile = compute_profile(f, p);
          ConstructionFamily fam = build_H_family(n, p, profile.q, 0, profile.b_family);
          start = std::get<Graph>(fam.members.front());
        }
        ClimbResult climb =
            hillclimb_spex(static_cast<int>(n), f, p, iters, seed, tol, start);
        partial["climb"] = json{{"graph6", to_graph6(climb.best)},
                                {"canonical", canonical_form(climb.best)},
                                {"accepted", climb.accepted},
                                {"spectral", spectral_json(climb.spectral)}};
        out["climb"] = partial["climb"];
      }
      emit(dump(out), out_path);
    } else if (c_verify->parsed()) {
      Graph f = parse_forbidden(f_source);
      ParamProfile profile = compute_profile(f, p);
      long long lo = n_from > 0 ? n_from : n;
      long long hi = n_to > 0 ? n_to : n;
      check(lo >= 1 && lo <= hi, errc::invalid_parameters, "bad n-range");
      std::vector<SearchReport> reports;
      bool asserted_ok = true;
      for (long long k = lo; k <= hi; ++k) {
        SearchReport rep =
            verify_instance(static_cast<int>(k), f, p, profile, tol, workers);
        asserted_ok =
            asserted_ok && rep.construction_free_ok && rep.sandwich_lower_ok.value_or(true);
        reports.push_back(std::move(rep));
        json rows = json::array();
        for (auto& r : reports) rows.push_back(report_json(r));
        partial = json{{"schema", "v1"}, {"rows", rows}};
      }
      emit(emit_table(reports, format), out_path);
      if (!asserted_ok) return 1;
    } else if (c_report->parsed()) {
      std::vector<GoldenRow> rows = golden_rows();
      emit(golden_table(rows, format), out_path);
      for (const GoldenRow& row : rows)
        if (!row.match) return 1;
    }
  } catch (const Error& e) {
    json err{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
    if (!partial.is_null()) err["partial"] = partial;
    std::cerr << dump(err);
    switch (e.code()) {
      case errc::budget_exceeded:
        return 3;
      case errc::invalid_parameters:
      case errc::parse_error:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
