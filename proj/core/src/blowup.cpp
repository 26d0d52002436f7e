#include "spexlab/blowup.hpp"

#include <unordered_set>

#include "spexlab/enumerate.hpp"
#include "spexlab/invariants.hpp"
#include "spexlab/subgraph.hpp"

namespace spexlab {

Graph strip_isolated(const Graph& f) {
  Graph g = induced_subgraph(f, f.vertex_mask() & ~f.isolated_vertices());
  check(g.edge_count() > 0, errc::empty_forbidden_graph, "forbidden graph has no edges");
  return g;
}

Graph edge_blowup(const Graph& f, int p) {
  check(p >= 1, errc::invalid_parameters, "blow-up needs p >= 1");
  check(f.edge_count() > 0, errc::empty_forbidden_graph, "blow-up of an edgeless graph");
  int n = f.vertex_count();
  long long total = n + static_cast<long long>(p - 1) * f.edge_count();
  check(total <= Graph::kMaxVertices, errc::capacity_exceeded, "blow-up exceeds 64 vertices");
  Graph g(static_cast<int>(total));
  int fresh = n;
  for (auto [u, v] : f.edges()) {
    std::vector<int> clique{u, v};
    for (int i = 0; i < p - 1; ++i) clique.push_back(fresh++);
    for (size_t a = 0; a < clique.size(); ++a)
      for (size_t b = a + 1; b < clique.size(); ++b)
        if (!g.has_edge(clique[a], clique[b])) g.add_edge(clique[a], clique[b]);
  }
  return g;
}

Graph vertex_split(const Graph& f, VertexSet u) {
  check((u & ~f.vertex_mask()) == 0, errc::invalid_vertex, "split set outside the graph");
  int n = f.vertex_count();
  long long total = 0;
  std::vector<int> base(static_cast<size_t>(n), -1);  // first index for each vertex
  for (int v = 0; v < n; ++v) {
    base[static_cast<size_t>(v)] = static_cast<int>(total);
    total += (u & bit(v)) ? f.degree(v) : 1;
  }
  check(total <= Graph::kMaxVertices, errc::capacity_exceeded, "split exceeds 64 vertices");
  Graph g(static_cast<int>(total));
  std::vector<int> next_copy(base.begin(), base.end());
  for (auto [x, y] : f.edges()) {
    int xi = (u & bit(x)) ? next_copy[static_cast<size_t>(x)]++ : base[static_cast<size_t>(x)];
    int yi = (u & bit(y)) ? next_copy[static_cast<size_t>(y)]++ : base[static_cast<size_t>(y)];
    g.add_edge(xi, yi);
  }
  return g;
}

IsoClassSet split_closure_family(const Graph& f) {
  check(f.edge_count() > 0, errc::empty_forbidden_graph, "splitting an edgeless graph");
  check(f.isolated_vertices() == 0, errc::invalid_parameters,
        "strip isolated vertices before splitting");
  int n = f.vertex_count();
  check(n <= 16, errc::budget_exceeded, "split closure limited to 16 vertices");
  IsoClassSet fam;
  for (VertexSet u = 0;; ++u) {
    fam.insert(vertex_split(f, u & f.vertex_mask()));
    if (u == f.vertex_mask()) break;
  }
  return fam;
}

IsoClassSet decomposition_family(const Graph& f, int p) {
  Graph f0 = strip_isolated(f);
  int chi = chromatic_number(f0);
  check(chi <= p - 1, errc::lemma_inapplicable,
        "decomposition family needs chi(F) <= p-1");
  return split_closure_family(f0);
}

namespace {

// T_{p-1}((p-1)t) joined onto M ∪ E_t, all explicit.
Graph oracle_host(const Graph& m, int p, int t) {
  Graph left = m;
  for (int i = 0; i < t; ++i) left = disjoint_union(left, Graph(1));
  Graph right((p - 1) * t);
  for (int a = 0; a < (p - 1) * t; ++a)
    for (int b = a + 1; b < (p - 1) * t; ++b)
      if (a / t != b / t) right.add_edge(a, b);
  return join(left, right);
}

}  // namespace

OracleResult decomposition_family_oracle(const Graph& f, int p, int t_max, int max_vertices) {
  Graph f0 = strip_isolated(f);
  check(p >= 2, errc::invalid_parameters, "oracle needs p >= 2");
  check(t_max >= 0 && t_max <= 4, errc::budget_exceeded, "t budget is 0..4");
  check(max_vertices >= 1 && max_vertices <= 9, errc::budget_exceeded,
        "candidate budget is 9 vertices");
  Graph pattern = edge_blowup(f0, p);
  check(pattern.vertex_count() <= 12, errc::budget_exceeded,
        "oracle limited to blow-ups on 12 vertices");

  // The host grows with t (more E_t vertices, larger Turán part), so testing
  // the largest t covers every smaller one.
  auto works = [&](const Graph& m) {
    return contains_subgraph(oracle_host(m, p, t_max), pattern);
  };

  OracleResult res;
  res.t_max = t_max;
  res.max_vertices = max_vertices;
  std::unordered_set<std::string> working;
  std::vector<Graph> all;
  for (int k = 1; k <= max_vertices; ++k)
    detail::enumerate_graphs_impl(k, [&](const Graph& g) { all.push_back(g); }, nullptr);
  res.candidates = static_cast<long long>(all.size());
  for (const Graph& m : all)
    if (works(m)) working.insert(canonical_form(m));

  // works() is subgraph-monotone, so minimality only needs one-step deletions.
  for (const Graph& m : all) {
    if (!working.count(canonical_form(m))) continue;
    bool minimal = true;
    for (auto [u, v] : m.edges()) {
      Graph d = m;
      d.remove_edge(u, v);
      if (working.count(canonical_form(d))) {
        minimal = false;
        break;
      }
    }
    for (int v = 0; minimal && v < m.vertex_count(); ++v) {
      Graph d = induced_subgraph(m, m.vertex_mask() & ~bit(v));
      if (d.vertex_count() >= 1 && working.count(canonical_form(d))) minimal = false;
    }
    if (minimal) res.family.insert(m);
  }
  return res;
}

IsoClassSet bipartite_subfamily(const IsoClassSet& family) {
  check(!family.empty(), errc::empty_family, "empty decomposition family");
  int best = -1;
  for (auto& [form, m] : family) {
    if (!is_bipartite(m)) continue;
    int q = independent_covering_number(m);
    if (best < 0 || q < best) best = q;
  }
  check(best >= 0, errc::empty_family, "no bipartite member");
  IsoClassSet out;
  for (auto& [form, m] : family)
    if (is_bipartite(m) && independent_covering_number(m) == best) out.insert(m);
  return out;
}

}  // namespace spexlab
