#include "spexlab/spectral.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <variant>

#include "spexlab/errors.hpp"

namespace spexlab {

namespace {

constexpr long long kIterationCap = 2'000'000;

struct IterOut {
  double rho = 0.0;
  double residual = 0.0;
  long long iterations = 0;
  std::vector<double> vec;
};

using MatVec = std::function<void(const std::vector<double>&, std::vector<double>&)>;

// Power iteration on M + I for a symmetric nonnegative irreducible M given as
// a mat-vec. The shift keeps iterates positive and the dominant eigenvalue
// simple. For the returned unit x with z = (M+I)x and r = x'z, both
// ||z - rx||_2 and max_v z_v/x_v - r bound |r - 1 - rho(M)|: the Rayleigh
// quotient sits below the top eigenvalue and the Collatz-Wielandt ratio above
// the spectral radius. Termination also accepts the double-precision floor so
// large-magnitude quotient matrices cannot spin forever.
IterOut certified_power(int n, const MatVec& matvec, double tol) {
  std::vector<double> x(static_cast<size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> z(static_cast<size_t>(n));
  IterOut out;
  for (;;) {
    ++out.iterations;
    matvec(x, z);
    for (int i = 0; i < n; ++i) z[static_cast<size_t>(i)] += x[static_cast<size_t>(i)];
    double r = 0;
    for (int i = 0; i < n; ++i) r += x[static_cast<size_t>(i)] * z[static_cast<size_t>(i)];
    double l2 = 0;
    for (int i = 0; i < n; ++i) {
      double d = z[static_cast<size_t>(i)] - r * x[static_cast<size_t>(i)];
      l2 += d * d;
    }
    l2 = std::sqrt(l2);
    double up = 0;
    for (int i = 0; i < n; ++i)
      up = std::max(up, z[static_cast<size_t>(i)] / x[static_cast<size_t>(i)]);
    double resid = std::max(l2, up - r);
    if (resid <= std::max(tol, up * 32 * DBL_EPSILON)) {
      out.rho = r - 1.0;
      out.residual = resid;
      out.vec = x;
      return out;
    }
    check(out.iterations < kIterationCap, errc::convergence_failure,
          "power iteration did not certify the requested tolerance");
    double nz = 0;
    for (double v : z) nz += v * v;
    nz = std::sqrt(nz);
    for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = z[static_cast<size_t>(i)] / nz;
  }
}

void check_tol(double tol) {
  check(tol >= 1e-13, errc::invalid_parameters, "tolerance below double precision support");
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
  check_tol(tol);
  SpectralResult best;
  best.perron.assign(static_cast<size_t>(g.vertex_count()), 0.0);
  if (g.vertex_count() == 0) return best;
  bool have = false;
  for (VertexSet comp : components(g)) {
    std::vector<int> verts;
    for_each_vertex(comp, [&](int v) { verts.push_back(v); });
    Graph sub = induced_subgraph(g, comp);
    int n = sub.vertex_count();
    auto matvec = [&](const std::vector<double>& x, std::vector<double>& z) {
      for (int i = 0; i < n; ++i) {
        double s = 0;
        for_each_vertex(sub.neighbors(i), [&](int j) { s += x[static_cast<size_t>(j)]; });
        z[static_cast<size_t>(i)] = s;
      }
    };
    IterOut it = certified_power(n, matvec, tol);
    best.iterations += it.iterations;
    best.residual = std::max(best.residual, it.residual);
    if (!have || it.rho > best.rho) {
      have = true;
      best.rho = it.rho;
      std::fill(best.perron.begin(), best.perron.end(), 0.0);
      for (int i = 0; i < n; ++i)
        best.perron[static_cast<size_t>(verts[static_cast<size_t>(i)])] =
            it.vec[static_cast<size_t>(i)];
    }
  }
  return best;
}

SpectralResult spectral_radius(const BlockModel& bm, double tol) {
  check_tol(tol);
  size_t k = bm.sizes.size();
  check(bm.link.size() == k, errc::invalid_parameters, "link matrix order mismatch");
  for (size_t i = 0; i < k; ++i) {
    check(bm.sizes[i] >= 1, errc::invalid_parameters, "empty block");
    check(bm.link[i].size() == k, errc::invalid_parameters, "link matrix order mismatch");
    check(bm.link[i][i] == 0, errc::invalid_parameters, "blocks are internally empty");
    for (size_t j = 0; j < k; ++j)
      check(bm.link[i][j] == bm.link[j][i], errc::invalid_parameters, "link matrix not symmetric");
  }
  SpectralResult best;
  best.perron.assign(k, 0.0);
  if (k == 0) return best;

  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (size_t s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    std::vector<size_t> queue{s};
    while (!queue.empty()) {
      size_t u = queue.back();
      queue.pop_back();
      for (size_t v = 0; v < k; ++v)
        if (bm.link[u][v] && comp[v] < 0) {
          comp[v] = ncomp;
          queue.push_back(v);
        }
    }
    ++ncomp;
  }

  bool have = false;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<size_t> blocks;
    for (size_t i = 0; i < k; ++i)
      if (comp[i] == c) blocks.push_back(i);
    int n = static_cast<int>(blocks.size());
    if (n == 1) {
      // linkless block: edgeless inside, radius 0
      if (!have) {
        have = true;
        best.rho = 0.0;
        best.perron[blocks[0]] = 1.0;
      }
      continue;
    }
    // symmetrized divisor matrix: S_ij = link_ij * sqrt(s_i s_j) shares the
    // spectrum of the quotient B_ij = link_ij * s_j, whose top eigenvalue is
    // the host radius on this component
    std::vector<double> s(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (bm.link[blocks[static_cast<size_t>(i)]][blocks[static_cast<size_t>(j)]])
          s[static_cast<size_t>(i * n + j)] =
              std::sqrt(static_cast<double>(bm.sizes[blocks[static_cast<size_t>(i)]]) *
                        static_cast<double>(bm.sizes[blocks[static_cast<size_t>(j)]]));
    auto matvec = [&](const std::vector<double>& x, std::vector<double>& z) {
      for (int i = 0; i < n; ++i) {
        double acc = 0;
        for (int j = 0; j < n; ++j) acc += s[static_cast<size_t>(i * n + j)] * x[static_cast<size_t>(j)];
        z[static_cast<size_t>(i)] = acc;
      }
    };
    IterOut it = certified_power(n, matvec, tol);
    best.iterations += it.iterations;
    best.residual = std::max(best.residual, it.residual);
    if (!have || it.rho > best.rho) {
      have = true;
      best.rho = it.rho;
      std::fill(best.perron.begin(), best.perron.end(), 0.0);
      for (int i = 0; i < n; ++i)
        best.perron[blocks[static_cast<size_t>(i)]] = it.vec[static_cast<size_t>(i)];
    }
  }
  return best;
}

SpectralResult spectral_radius(const AnyGraph& g, double tol) {
  return std::visit([&](const auto& x) { return spectral_radius(x, tol); }, g);
}

SpectralOrder compare_spectral(const AnyGraph& a, const AnyGraph& b, double tol) {
  SpectralResult ra = spectral_radius(a, tol);
  SpectralResult rb = spectral_radius(b, tol);
  if (ra.rho - ra.residual > rb.rho + rb.residual) return SpectralOrder::greater;
  if (ra.rho + ra.residual < rb.rho - rb.residual) return SpectralOrder::less;
  return SpectralOrder::indistinguishable;
}

}  // namespace spexlab
