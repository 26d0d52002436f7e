#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "spexlab/constructions.hpp"
#include "spexlab/errors.hpp"
#include "spexlab/spectral.hpp"

using namespace spexlab;
using namespace spexlab::test;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("closed forms at desk scale") {
  for (int n = 1; n <= 12; ++n) {
    SpectralResult r = spectral_radius(complete_graph(n));
    CHECK(r.residual <= 1e-11);
    CHECK(std::abs(r.rho - (n - 1)) <= r.residual + 1e-12);
  }
  for (int n = 3; n <= 12; ++n)
    CHECK(std::abs(spectral_radius(cycle_graph(n)).rho - 2.0) <= 1e-10);
  for (int n = 2; n <= 12; ++n)
    CHECK(std::abs(spectral_radius(path_graph(n)).rho - 2 * std::cos(kPi / (n + 1))) <= 1e-10);
  for (int a = 1; a <= 6; ++a)
    for (int b = a; b <= 6; ++b)
      CHECK(std::abs(spectral_radius(complete_bipartite(a, b)).rho - std::sqrt(1.0 * a * b)) <=
            1e-10);
}

TEST_CASE("edge cases") {
  CHECK(spectral_radius(Graph(0)).rho == 0.0);
  CHECK(spectral_radius(Graph(5)).rho == 0.0);
  CHECK(spectral_radius(Graph(5)).residual == 0.0);
  CHECK(spectral_radius(complete_graph(1)).rho == 0.0);
}

TEST_CASE("disconnected hosts take the component maximum") {
  Graph g = disjoint_union(complete_graph(3), complete_graph(5));
  SpectralResult r = spectral_radius(g);
  CHECK(std::abs(r.rho - 4.0) <= r.residual + 1e-12);
  // Perron weight sits on the dominant component only.
  for (int v = 0; v < 3; ++v) CHECK(r.perron[v] == 0.0);
  for (int v = 3; v < 8; ++v) CHECK(r.perron[v] > 0.1);

  SpectralResult tie = spectral_radius(disjoint_union(complete_graph(3), complete_graph(3)));
  CHECK(std::abs(tie.rho - 2.0) <= tie.residual + 1e-12);
}

TEST_CASE("perron vector properties") {
  SpectralResult r = spectral_radius(cycle_graph(9));
  double norm = 0.0;
  for (double x : r.perron) {
    CHECK(x > 0.0);
    norm += x * x;
  }
  CHECK(std::abs(norm - 1.0) <= 1e-9);
  for (double x : r.perron) CHECK(std::abs(x - r.perron[0]) <= 1e-8);  // vertex-transitive

  // Eigenvector equation holds within the certificate.
  Graph g = path_graph(7);
  SpectralResult p = spectral_radius(g);
  for (int v = 0; v < 7; ++v) {
    double acc = 0.0;
    for_each_vertex(g.neighbors(v), [&](int w) { acc += p.perron[w]; });
    CHECK(std::abs(acc - p.rho * p.perron[v]) <= 1e-9);
  }
}

TEST_CASE("certified monotonicity under edge addition") {
  std::mt19937_64 rng(71);
  int checked = 0;
  while (checked < 25) {
    Graph g = random_graph(4 + static_cast<int>(rng() % 9), 0.5, rng);
    if (!is_connected(g) || g.edge_count() == 0) continue;
    int n = g.vertex_count();
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u == v || g.has_edge(u, v)) continue;
    SpectralResult before = spectral_radius(g);
    g.add_edge(u, v);
    SpectralResult after = spectral_radius(g);
    CHECK(after.rho - after.residual > before.rho + before.residual);
    ++checked;
  }
}

TEST_CASE("rayleigh lower bound from the mean degree") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(10, 0.4, rng);
    SpectralResult r = spectral_radius(g);
    CHECK(r.rho >= 2.0 * g.edge_count() / 10 - r.residual - 1e-12);
  }
}

TEST_CASE("block models agree with their explicit twins") {
  for (int n : {7, 20, 33, 64})
    for (int p = 2; p <= 6; ++p) {
      double exact = spectral_radius(turan_graph(n, p)).rho;
      SpectralResult qr = spectral_radius(turan_model(n, p));
      CHECK(std::abs(qr.rho - exact) <= 2e-9);
    }
  for (int n : {10, 25, 64}) {
    double exact = spectral_radius(h_graph(n, 3, 3)).rho;
    CHECK(std::abs(spectral_radius(h_model(n, 3, 3)).rho - exact) <= 2e-9);
  }
  // Non-regular quotient: a star as a two-block model.
  for (int n : {5, 17, 40}) {
    BlockModel star{{1, n - 1}, {{0, 1}, {1, 0}}};
    CHECK(std::abs(spectral_radius(star).rho - std::sqrt(n - 1.0)) <= 1e-9);
  }
}

TEST_CASE("block models far beyond the explicit range") {
  // 3 | n makes the host regular of degree 2n/3, which is then the radius.
  SpectralResult r = spectral_radius(turan_model(999'999, 3));
  CHECK(std::abs(r.rho - 666'666.0) <= 1e-5);
  CHECK(r.perron.size() == 3);

  BlockModel lonely{{42}, {{0}}};
  CHECK(spectral_radius(lonely).rho == 0.0);
}

TEST_CASE("block model validation") {
  CHECK_THROWS_AS(spectral_radius(BlockModel{{0}, {{0}}}), Error);
  CHECK_THROWS_AS(spectral_radius(BlockModel{{2, 3}, {{0, 1}}}), Error);
  CHECK_THROWS_AS(spectral_radius(BlockModel{{2, 3}, {{1, 1}, {1, 1}}}), Error);  // self link
  CHECK_THROWS_AS(spectral_radius(BlockModel{{2, 3}, {{0, 1}, {0, 0}}}), Error);  // asymmetric
  CHECK_THROWS_AS(spectral_radius(complete_graph(4), 1e-14), Error);  // tol below support
}

TEST_CASE("comparisons use certified intervals") {
  AnyGraph a = turan_graph(8, 2);
  AnyGraph b = turan_graph(9, 2);
  CHECK(compare_spectral(a, b) == SpectralOrder::less);
  CHECK(compare_spectral(b, a) == SpectralOrder::greater);
  CHECK(compare_spectral(a, a) == SpectralOrder::indistinguishable);

  AnyGraph c4 = cycle_graph(4);
  AnyGraph c9 = cycle_graph(9);
  CHECK(compare_spectral(c4, c9) == SpectralOrder::indistinguishable);  // both radius 2
}
