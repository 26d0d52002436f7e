#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spexlab/errors.hpp"

namespace spexlab {

// Vertex subsets are 64-bit masks; bit v = vertex v.
using VertexSet = std::uint64_t;

inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline int popcount(VertexSet s) { return __builtin_popcountll(s); }
inline int lowest(VertexSet s) { return __builtin_ctzll(s); }

// Iterate set bits low to high.
template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s) {
    int v = lowest(s);
    s &= s - 1;
    f(v);
  }
}

// Simple undirected graph on at most 64 vertices, one adjacency word per vertex.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n > 0 ? static_cast<size_t>(n) : 0, 0) {
    check(n >= 0 && n <= kMaxVertices, errc::capacity_exceeded,
          "graph order must be in [0, 64]");
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int vertex_count() const { return n_; }

  VertexSet vertex_mask() const {
    return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
  }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<size_t>(u)] & bit(v)) != 0;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    check(u != v, errc::loop_rejected, "loops are not allowed");
    adj_[static_cast<size_t>(u)] |= bit(v);
    adj_[static_cast<size_t>(v)] |= bit(u);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<size_t>(u)] &= ~bit(v);
    adj_[static_cast<size_t>(v)] &= ~bit(u);
  }

  int degree(int v) const { return popcount(neighbors(v)); }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, popcount(adj_[static_cast<size_t>(v)]));
    return d;
  }

  int edge_count() const {
    int twice = 0;
    for (auto a : adj_) twice += popcount(a);
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for_each_vertex(adj_[static_cast<size_t>(u)] & ~((bit(u) << 1) - 1),
                      [&](int v) { out.emplace_back(u, v); });
    return out;
  }

  VertexSet isolated_vertices() const {
    VertexSet s = 0;
    for (int v = 0; v < n_; ++v)
      if (adj_[static_cast<size_t>(v)] == 0) s |= bit(v);
    return s;
  }

  bool operator==(const Graph& o) const = default;

 private:
  void check_vertex(int v) const {
    check(v >= 0 && v < n_, errc::invalid_vertex, "vertex index out of range");
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// Named small graphs.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);      // n vertices: one center, n-1 leaves
Graph matching_graph(int t);  // t disjoint edges, 2t vertices
Graph complete_bipartite(int a, int b);

// Pure builders.
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
Graph induced_subgraph(const Graph& g, VertexSet keep);
Graph relabel(const Graph& g, const std::vector<int>& perm);  // vertex v -> perm[v]
Graph complement(const Graph& g);

// Connectivity.
VertexSet component_of(const Graph& g, int v);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace spexlab
