#include "spexlab/enumerate.hpp"

#include <vector>

#include "spexlab/canonical.hpp"

namespace spexlab {

namespace {

VertexSet apply_perm(VertexSet mask, const std::vector<int>& gamma) {
  VertexSet out = 0;
  for_each_vertex(mask, [&](int v) { out |= bit(gamma[static_cast<size_t>(v)]); });
  return out;
}

struct Generator {
  int target;
  const std::function<void(const Graph&)>& emit;
  const std::function<bool(const Graph&)>& keep;

  void grow(const Graph& g, const CanonicalResult& canon) {
    int k = g.vertex_count();
    if (k == target) {
      emit(g);
      return;
    }
    // orbit representatives of augmenting neighborhoods under Aut(g)
    std::vector<bool> skip(size_t{1} << k, false);
    for (VertexSet mask = 0; mask < (VertexSet{1} << k); ++mask) {
      if (skip[static_cast<size_t>(mask)]) continue;
      std::vector<VertexSet> frontier{mask};
      while (!frontier.empty()) {
        VertexSet cur = frontier.back();
        frontier.pop_back();
        for (auto& gamma : canon.generators) {
          VertexSet img = apply_perm(cur, gamma);
          if (img != mask && !skip[static_cast<size_t>(img)]) {
            skip[static_cast<size_t>(img)] = true;
            frontier.push_back(img);
          }
        }
      }
      Graph child(k + 1);
      for (auto [u, v] : g.edges()) child.add_edge(u, v);
      for_each_vertex(mask, [&](int v) { child.add_edge(v, k); });
      if (keep && !keep(child)) continue;
      CanonicalResult cc = canonical_labeling(child);
      int last = cc.labeling[static_cast<size_t>(k)];
      if (cc.orbit[static_cast<size_t>(k)] == cc.orbit[static_cast<size_t>(last)]) grow(child, cc);
    }
  }
};

}  // namespace

namespace detail {

void enumerate_graphs_impl(int n, const std::function<void(const Graph&)>& emit,
                           const std::function<bool(const Graph&)>& keep) {
  check(n >= 0, errc::invalid_parameters, "negative order");
  if (n == 0) {
    Graph g0(0);
    if (!keep || keep(g0)) emit(g0);
    return;
  }
  Graph g1(1);
  if (keep && !keep(g1)) return;
  Generator gen{n, emit, keep};
  gen.grow(g1, canonical_labeling(g1));
}

}  // namespace detail

void enumerate_graphs(int n, const std::function<void(const Graph&)>& emit,
                      const std::function<bool(const Graph&)>& keep) {
  check(n <= 10, errc::budget_exceeded, "exhaustive enumeration limited to 10 vertices");
  detail::enumerate_graphs_impl(n, emit, keep);
}

}  // namespace spexlab
