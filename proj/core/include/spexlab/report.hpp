#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spexlab/blowup.hpp"
#include "spexlab/constructions.hpp"
#include "spexlab/params.hpp"
#include "spexlab/search.hpp"
#include "spexlab/spectral.hpp"

namespace spexlab {

enum class Format { json, csv, text };
Format parse_format(const std::string& name);

// JSON views, schema "v1". Keys are emitted sorted, doubles as shortest
// round-trip decimals, so identical inputs serialize byte-identically.
// Wall-clock runtime is emitted as null in JSON (it would break that
// guarantee) and as a real column in csv/text.
nlohmann::json family_json(const IsoClassSet& family);
nlohmann::json graph_json(const Graph& g);
nlohmann::json block_model_json(const BlockModel& bm);
nlohmann::json profile_json(const ParamProfile& profile);
nlohmann::json oracle_json(const OracleResult& oracle);
nlohmann::json construction_json(const ConstructionFamily& fam);
nlohmann::json spectral_json(const SpectralResult& r, bool verbose = false);
nlohmann::json report_json(const SearchReport& rep);

// One row per report: n, ex, spex, rho(H_lower), rho(H_upper), flags.
// Absent values render as "-" in csv/text and null in JSON.
std::string emit_table(const std::vector<SearchReport>& reports, Format format);

// Named instances with closed-form parameter values, recomputed from scratch
// and compared field by field.
struct GoldenRow {
  std::string name;
  Graph f;
  int p = 0;
  int q = 0, beta = 0, lambda = 0, mu = 0;
  std::vector<std::string> b_forms;  // canonical forms of B
  ParamProfile computed;
  bool match = false;
};
std::vector<GoldenRow> golden_rows();
std::string golden_table(const std::vector<GoldenRow>& rows, Format format);
std::string golden_table(Format format);

}  // namespace spexlab
