#include "spexlab/graph.hpp"

#include <algorithm>

namespace spexlab {

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  check(n >= 3, errc::invalid_parameters, "cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int n) {
  check(n >= 2, errc::invalid_parameters, "star needs at least 2 vertices");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph matching_graph(int t) {
  check(t >= 1, errc::invalid_parameters, "matching needs at least 1 edge");
  Graph g(2 * t);
  for (int i = 0; i < t; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  check(a.vertex_count() + b.vertex_count() <= Graph::kMaxVertices, errc::capacity_exceeded,
        "union exceeds 64 vertices");
  Graph g(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  int off = a.vertex_count();
  for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  int off = a.vertex_count();
  for (int u = 0; u < a.vertex_count(); ++u)
    for (int v = 0; v < b.vertex_count(); ++v) g.add_edge(u, off + v);
  return g;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  check((keep & ~g.vertex_mask()) == 0, errc::invalid_vertex,
        "induced set contains vertices outside the graph");
  std::vector<int> newid(static_cast<size_t>(g.vertex_count()), -1);
  int m = 0;
  for_each_vertex(keep, [&](int v) { newid[static_cast<size_t>(v)] = m++; });
  Graph h(m);
  for_each_vertex(keep, [&](int u) {
    for_each_vertex(g.neighbors(u) & keep, [&](int v) {
      if (u < v) h.add_edge(newid[static_cast<size_t>(u)], newid[static_cast<size_t>(v)]);
    });
  });
  return h;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  check(perm.size() == static_cast<size_t>(g.vertex_count()), errc::invalid_parameters,
        "permutation size mismatch");
  Graph h(g.vertex_count());
  for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
  return h;
}

Graph complement(const Graph& g) {
  Graph h(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

VertexSet component_of(const Graph& g, int v) {
  VertexSet comp = bit(v);
  VertexSet frontier = comp;
  while (frontier) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int u) { next |= g.neighbors(u); });
    frontier = next & ~comp;
    comp |= frontier;
  }
  return comp;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertex_mask();
  while (left) {
    VertexSet c = component_of(g, lowest(left));
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return component_of(g, 0) == g.vertex_mask();
}

}  // namespace spexlab
