#include "spexlab/invariants.hpp"

#include <algorithm>

namespace spexlab {

namespace {

// Max matching inside `alive`. Branches on the lowest non-isolated vertex:
// either it stays unmatched or one of its edges is taken.
int matching_rec(const Graph& g, VertexSet alive) {
  while (alive) {
    int v = lowest(alive);
    if (g.neighbors(v) & alive) break;
    alive &= alive - 1;  // drop isolated-in-alive vertices
  }
  if (!alive) return 0;
  int v = lowest(alive);
  int best = matching_rec(g, alive & ~bit(v));
  for_each_vertex(g.neighbors(v) & alive, [&](int u) {
    best = std::max(best, 1 + matching_rec(g, alive & ~bit(v) & ~bit(u)));
  });
  return best;
}

bool matching_above_rec(const Graph& g, VertexSet alive, int need) {
  if (need <= 0) return true;
  while (alive) {
    int v = lowest(alive);
    if (g.neighbors(v) & alive) break;
    alive &= alive - 1;
  }
  if (popcount(alive) < 2 * need) return false;
  int v = lowest(alive);
  VertexSet nb = g.neighbors(v) & alive;
  bool found = false;
  for_each_vertex(nb, [&](int u) {
    if (!found && matching_above_rec(g, alive & ~bit(v) & ~bit(u), need - 1)) found = true;
  });
  if (found) return true;
  return matching_above_rec(g, alive & ~bit(v), need);
}

int cover_rec(const Graph& g, VertexSet alive) {
  int u = -1, v = -1;
  for_each_vertex(alive, [&](int x) {
    if (u >= 0) return;
    VertexSet nb = g.neighbors(x) & alive;
    if (nb) {
      u = x;
      v = lowest(nb);
    }
  });
  if (u < 0) return 0;
  return 1 + std::min(cover_rec(g, alive & ~bit(u)), cover_rec(g, alive & ~bit(v)));
}

bool covered_edges_ok(const Graph& g, VertexSet s) {
  for (auto [u, v] : g.edges())
    if (!((s & bit(u)) || (s & bit(v)))) return false;
  return true;
}

// All k-subsets of the positions listed in `pool`, via combination stepping.
template <typename F>
void for_each_subset_of_size(const std::vector<int>& pool, int k, F&& f) {
  int m = static_cast<int>(pool.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    VertexSet s = 0;
    for (int i : idx) s |= bit(pool[static_cast<size_t>(i)]);
    f(s);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace

int matching_number(const Graph& g) { return matching_rec(g, g.vertex_mask()); }

bool has_matching_above(const Graph& g, int k) {
  return matching_above_rec(g, g.vertex_mask(), k + 1);
}

int vertex_cover_number(const Graph& g) { return cover_rec(g, g.vertex_mask()); }

std::optional<VertexSet> bipartition_side(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(static_cast<size_t>(n), -1);
  VertexSet side = 0;
  for (int r = 0; r < n; ++r) {
    if (color[static_cast<size_t>(r)] >= 0) continue;
    color[static_cast<size_t>(r)] = 0;
    side |= bit(r);
    std::vector<int> stack{r};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      bool odd = false;
      for_each_vertex(g.neighbors(u), [&](int w) {
        if (color[static_cast<size_t>(w)] < 0) {
          color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(u)];
          if (color[static_cast<size_t>(w)] == 0) side |= bit(w);
          stack.push_back(w);
        } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(u)]) {
          odd = true;
        }
      });
      if (odd) return std::nullopt;
    }
  }
  return side;
}

bool is_bipartite(const Graph& g) { return bipartition_side(g).has_value(); }

int independent_covering_number(const Graph& g) {
  auto side = bipartition_side(g);
  check(side.has_value(), errc::not_bipartite, "independent covering needs a bipartite graph");
  // An independent cover restricted to a connected component must be one full
  // side of its bipartition, so the minimum is the smaller side, componentwise.
  int q = 0;
  for (VertexSet comp : components(g)) {
    if (popcount(comp) < 2) continue;
    int a = popcount(comp & *side);
    q += std::min(a, popcount(comp) - a);
  }
  return q;
}

std::vector<VertexSet> independent_coverings_of_size(const Graph& g, int k) {
  auto side = bipartition_side(g);
  check(side.has_value(), errc::not_bipartite, "independent covering needs a bipartite graph");
  std::vector<std::pair<VertexSet, VertexSet>> options;  // per component with edges
  std::vector<int> isolated;
  for (VertexSet comp : components(g)) {
    if (popcount(comp) < 2) {
      isolated.push_back(lowest(comp));
    } else {
      options.emplace_back(comp & *side, comp & ~*side);
    }
  }
  std::vector<VertexSet> out;
  size_t m = options.size();
  check(m <= 30, errc::budget_exceeded, "too many components");
  for (VertexSet choice = 0; choice < (VertexSet{1} << m); ++choice) {
    VertexSet base = 0;
    for (size_t i = 0; i < m; ++i) base |= (choice & (VertexSet{1} << i)) ? options[i].second : options[i].first;
    int rest = k - popcount(base);
    for_each_subset_of_size(isolated, rest, [&](VertexSet pad) { out.push_back(base | pad); });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexSet> coverings_strictly_below(const Graph& g, int k) {
  std::vector<int> pool;
  for (int v = 0; v < g.vertex_count(); ++v) pool.push_back(v);
  std::vector<VertexSet> out;
  for (int size = 0; size < k; ++size) {
    for_each_subset_of_size(pool, size, [&](VertexSet s) {
      if (covered_edges_ok(g, s)) out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool colorable_rec(const Graph& g, const std::vector<int>& order, std::vector<int>& color,
                   size_t at, int k, int used) {
  if (at == order.size()) return true;
  int v = order[at];
  unsigned taken = 0;
  for_each_vertex(g.neighbors(v), [&](int w) {
    if (color[static_cast<size_t>(w)] >= 0) taken |= 1u << color[static_cast<size_t>(w)];
  });
  int limit = std::min(k - 1, used);  // first use of a new color only in index order
  for (int c = 0; c <= limit; ++c) {
    if (taken & (1u << c)) continue;
    color[static_cast<size_t>(v)] = c;
    if (colorable_rec(g, order, color, at + 1, k, std::max(used, c + 1))) return true;
    color[static_cast<size_t>(v)] = -1;
  }
  return false;
}

bool is_colorable(const Graph& g, int k) {
  std::vector<int> order;
  for (int v = 0; v < g.vertex_count(); ++v) order.push_back(v);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
  std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
  return colorable_rec(g, order, color, 0, k, 0);
}

}  // namespace

int chromatic_number(const Graph& g) {
  check(g.vertex_count() <= 20, errc::budget_exceeded, "chromatic number limited to 20 vertices");
  if (g.vertex_count() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  // greedy clique gives a sound lower bound to start from
  int v0 = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > g.degree(v0)) v0 = v;
  VertexSet clique = bit(v0);
  VertexSet cand = g.neighbors(v0);
  while (cand) {
    int best = -1;
    for_each_vertex(cand, [&](int v) {
      if (best < 0 || popcount(g.neighbors(v) & cand) > popcount(g.neighbors(best) & cand)) best = v;
    });
    clique |= bit(best);
    cand &= g.neighbors(best);
  }
  for (int k = std::max(2, popcount(clique));; ++k)
    if (is_colorable(g, k)) return k;
}

}  // namespace spexlab
