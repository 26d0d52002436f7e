#pragma once

#include <vector>

#include "spexlab/constructions.hpp"
#include "spexlab/graph.hpp"

namespace spexlab {

// Certified dominant-eigenvalue computation. rho is the Rayleigh estimate of
// a shifted (A + I) power iteration; residual bounds |rho - rho(G)| up to
// floating-point roundoff, combining the l2 eigen-residual with the
// Collatz-Wielandt upper gap of the final positive iterate.
struct SpectralResult {
  double rho = 0.0;
  double residual = 0.0;
  long long iterations = 0;
  // Unit eigenvector estimate: per vertex for explicit graphs, per block for
  // block models (the host entry at a vertex of block i is perron[i]/sqrt(s_i)
  // before renormalization). For disconnected inputs, supported on a component
  // attaining the radius.
  std::vector<double> perron;
};

SpectralResult spectral_radius(const Graph& g, double tol = 1e-12);
SpectralResult spectral_radius(const BlockModel& bm, double tol = 1e-12);
SpectralResult spectral_radius(const AnyGraph& g, double tol = 1e-12);

enum class SpectralOrder { less, greater, indistinguishable };

// Strict order only when the certified intervals are disjoint.
SpectralOrder compare_spectral(const AnyGraph& a, const AnyGraph& b, double tol = 1e-12);

}  // namespace spexlab
