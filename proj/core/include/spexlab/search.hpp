#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "spexlab/canonical.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/params.hpp"
#include "spexlab/spectral.hpp"

namespace spexlab {

// True iff g contains no copy of the edge blow-up of f (isolated vertices of
// f dropped first).
bool is_blowup_free(const Graph& g, const Graph& f, int p);

// Exact maximum edge count over blow-up-free classes on n vertices, with all
// extremal classes. Budget n <= 10.
struct ExResult {
  int max_edges = -1;
  IsoClassSet classes;
  long long enumerated = 0;  // free classes scanned
};
ExResult ex_bruteforce(int n, const Graph& f, int p);

// Maximum certified spectral radius over blow-up-free classes on n vertices.
// classes holds every class whose certified interval reaches the best lower
// bound (ties up to tolerance). Budget n <= 9, or 10 when allow_n10 is set.
struct SpexResult {
  double value = 0.0;
  double residual = 0.0;
  IsoClassSet classes;
  long long enumerated = 0;
};
SpexResult spex_bruteforce(int n, const Graph& f, int p, double tol = 1e-10,
                           bool allow_n10 = false, int workers = 1);

// Seeded random edge-toggle hill climbing over blow-up-free graphs on n
// vertices: a toggle is accepted iff freeness is preserved and the certified
// intervals prove a radius increase (so only additions can ever pass, and the
// final radius is a valid lower bound on spex). Starts from `start` when
// given, otherwise from a seeded random free graph.
struct ClimbResult {
  Graph best;
  SpectralResult spectral;
  long long accepted = 0;
};
ClimbResult hillclimb_spex(int n, const Graph& f, int p, long long iters, std::uint64_t seed,
                           double tol = 1e-10, const std::optional<Graph>& start = std::nullopt);

// Desk-scale verification trail for one (n, F, p) instance. Constructions too
// large to exist at this order leave their fields absent. The oracles run
// within their budgets (ex at n <= 10, spex at n <= min(9, spex_max_n)).
//   construction_free_ok  every existing construction member is free (holds
//                         for all n; callers assert it)
//   sandwich_lower_ok     rho(H(n,p,q,0,B)) <= spex via certified intervals
//                         when the oracle ran; otherwise equal to
//                         construction_free_ok, which already implies the
//                         bound for every n (callers assert it); absent when
//                         the construction does not exist at this order
//   spex_subset_ex        SPEX subset of EX at this n (reported only; the
//                         containment theorem is asymptotic)
//   upper_strict_ok       spex < rho(H(n,p,q,lambda-1,B)) certified strictly
//                         (reported only)
struct SearchReport {
  int n = 0;
  int p = 0;
  std::string f;  // graph6 of the stripped forbidden graph
  std::optional<int> ex_value;
  IsoClassSet ex_classes;
  std::optional<double> spex_value;
  double spex_residual = 0.0;
  IsoClassSet spex_classes;
  std::optional<double> rho_h_lower;  // best certified radius over H(n,p,q,0,B)
  std::optional<double> rho_h_upper;  // same over H(n,p,q,lambda-1,B)
  std::optional<bool> spex_subset_ex;
  std::optional<bool> upper_strict_ok;
  std::optional<bool> sandwich_lower_ok;
  bool construction_free_ok = false;
  long long enumerated_count = 0;
  double runtime_seconds = 0.0;
};
SearchReport verify_instance(int n, const Graph& f, int p, const ParamProfile& profile,
                             double tol = 1e-10, int workers = 1, int spex_max_n = 9);

}  // namespace spexlab
