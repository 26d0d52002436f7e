#pragma once

// Independent brute-force oracles used to cross-check the library. Everything
// here favors transparent exhaustion over cleverness and shares no code with
// the implementations under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab::test {

// Upper-triangle adjacency bits under the identity labeling.
inline std::uint64_t edge_code(const Graph& g) {
  std::uint64_t code = 0;
  int pos = 0;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v, ++pos)
      if (g.has_edge(u, v)) code |= std::uint64_t{1} << pos;
  return code;
}

// Minimum edge code over all relabelings; canonical by construction.
inline std::uint64_t brute_canonical_code(const Graph& g) {
  int n = g.vertex_count();
  if (n > 8) throw std::runtime_error("brute_canonical_code: n > 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, edge_code(relabel(g, perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return brute_canonical_code(a) == brute_canonical_code(b);
}

// Injective adjacency-preserving image of pattern inside host, by plain
// backtracking over pattern vertices in index order.
inline bool brute_embeds(const Graph& host, const Graph& pattern) {
  int np = pattern.vertex_count(), nh = host.vertex_count();
  if (np > nh) return false;
  std::vector<int> img(np, -1);
  std::vector<bool> used(nh, false);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == np) return true;
    for (int h = 0; h < nh; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (int w = 0; w < v && ok; ++w)
        if (pattern.has_edge(v, w) && !host.has_edge(h, img[w])) ok = false;
      if (!ok) continue;
      img[v] = h;
      used[h] = true;
      if (self(self, v + 1)) return true;
      used[h] = false;
      img[v] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

inline int brute_matching_number(const Graph& g) {
  auto edges = g.edges();
  auto rec = [&](auto&& self, std::size_t i, VertexSet used) -> int {
    if (i == edges.size()) return 0;
    int best = self(self, i + 1, used);
    auto [u, v] = edges[i];
    if (!(used & bit(u)) && !(used & bit(v)))
      best = std::max(best, 1 + self(self, i + 1, used | bit(u) | bit(v)));
    return best;
  };
  return rec(rec, 0, 0);
}

inline bool covers_all_edges(const Graph& g, VertexSet s) {
  for (auto [u, v] : g.edges())
    if (!(s & bit(u)) && !(s & bit(v))) return false;
  return true;
}

inline bool is_independent_set(const Graph& g, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if (g.neighbors(v) & s) ok = false;
  });
  return ok;
}

inline int brute_vertex_cover_number(const Graph& g) {
  int n = g.vertex_count();
  int best = n;
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s)
    if (popcount(s) < best && covers_all_edges(g, s)) best = popcount(s);
  return best;
}

// Least independent vertex cover, or -1 when none exists (non-bipartite).
inline int brute_independent_cover_number(const Graph& g) {
  int n = g.vertex_count();
  int best = -1;
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s)
    if ((best < 0 || popcount(s) < best) && is_independent_set(g, s) && covers_all_edges(g, s))
      best = popcount(s);
  return best;
}

inline int brute_chromatic_number(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> color(n, -1);
    auto rec = [&](auto&& self, int v) -> bool {
      if (v == n) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for_each_vertex(g.neighbors(v), [&](int w) {
          if (w < v && color[w] == c) ok = false;
        });
        if (!ok) continue;
        color[v] = c;
        if (self(self, v + 1)) return true;
        color[v] = -1;
      }
      return false;
    };
    if (rec(rec, 0)) return k;
  }
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution flip(density);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace spexlab::test
