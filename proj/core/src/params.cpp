#include "spexlab/params.hpp"

#include <algorithm>

#include "spexlab/blowup.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/invariants.hpp"
#include "spexlab/subgraph.hpp"

namespace spexlab {

int param_beta(const IsoClassSet& family) {
  check(!family.empty(), errc::empty_family, "beta of an empty family");
  int best = -1;
  for (auto& [form, m] : family) {
    int b = vertex_cover_number(m);
    if (best < 0 || b < best) best = b;
  }
  return best;
}

int param_q(const IsoClassSet& family) {
  check(!family.empty(), errc::empty_family, "q of an empty family");
  int best = -1;
  for (auto& [form, m] : family) {
    if (!is_bipartite(m)) continue;
    int q = independent_covering_number(m);
    if (best < 0 || q < best) best = q;
  }
  check(best >= 0, errc::empty_family, "no bipartite member");
  return best;
}

IsoClassSet family_B(const IsoClassSet& family, int beta, int q) {
  IsoClassSet out;
  if (beta == q) {
    out.insert(complete_graph(q));
    return out;
  }
  IsoClassSet raw;
  for (auto& [form, m] : family)
    for (VertexSet s : coverings_strictly_below(m, q)) raw.insert(induced_subgraph(m, s));
  // forbidding a family is forbidding its subgraph-minimal members
  for (auto& [form, candidate] : raw) {
    bool minimal = true;
    for (auto& [oform, other] : raw) {
      if (oform == form) continue;
      if (contains_subgraph(candidate, other)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(candidate);
  }
  return out;
}

UFamilyResult family_U_and_mu(const Graph& f, int q) {
  check(f.edge_count() > 0, errc::empty_forbidden_graph, "U-family of an edgeless graph");
  check(f.vertex_count() <= 20, errc::budget_exceeded, "U-family limited to 20 vertices");
  UFamilyResult res;
  res.mu = -1;
  for (VertexSet u = 0;; ++u) {
    VertexSet rest = f.vertex_mask() & ~u;
    bool independent = true;
    for_each_vertex(rest, [&](int v) {
      if (f.neighbors(v) & rest) independent = false;
    });
    if (independent) {
      Graph split = vertex_split(f, u);
      if (is_bipartite(split) && independent_covering_number(split) == q) {
        res.u_sets.push_back(u);
        int dmax = 0;
        for_each_vertex(u, [&](int v) { dmax = std::max(dmax, f.degree(v)); });
        if (res.mu < 0 || dmax < res.mu) res.mu = dmax;
      }
    }
    if (u == f.vertex_mask()) break;
  }
  check(res.mu >= 0, errc::internal_invariant, "U-family is never empty");
  return res;
}

int param_lambda(const IsoClassSet& mstar, int q) {
  check(!mstar.empty(), errc::empty_family, "lambda of an empty family");
  int best = -1;
  for (auto& [form, m] : mstar) {
    for (VertexSet cover : independent_coverings_of_size(m, q)) {
      for_each_vertex(cover, [&](int x) {
        int d = m.degree(x);
        if (best < 0 || d < best) best = d;
      });
    }
  }
  check(best >= 0, errc::internal_invariant, "bipartite member admits a size-q covering");
  return best;
}

long long chvatal_hanson(int nu, int delta) {
  check(nu >= 0 && delta >= 0, errc::invalid_parameters, "negative parameters");
  if (nu == 0 || delta == 0) return 0;
  long long half_up = (delta + 1) / 2;
  return static_cast<long long>(nu) * delta + (delta / 2) * (nu / half_up);
}

IsoClassSet family_D(int lambda) {
  check(lambda >= 1, errc::invalid_parameters, "lambda must be at least 1");
  IsoClassSet out;
  if (lambda == 1) {
    out.insert(Graph(0));
    return out;
  }
  if (lambda % 2 == 1) {
    out.insert(disjoint_union(complete_graph(lambda), complete_graph(lambda)));
    return out;
  }
  check(lambda <= 6, errc::budget_exceeded, "even-lambda enumeration limited to 6");
  int m = 2 * lambda - 1;
  int dmax = lambda - 1;
  long long target = chvatal_hanson(lambda - 1, lambda - 1);
  auto keep = [&](const Graph& g) {
    if (g.max_degree() > dmax) return false;
    long long e = g.edge_count();
    if (e > target) return false;
    // every later vertex adds at most dmax edges
    return e + static_cast<long long>(m - g.vertex_count()) * dmax >= target;
  };
  detail::enumerate_graphs_impl(
      m,
      [&](const Graph& g) {
        if (g.edge_count() == target) out.insert(g);
      },
      keep);
  return out;
}

ParamProfile compute_profile(const Graph& f, int p) {
  check(p >= 2, errc::invalid_parameters, "profile needs p >= 2");
  ParamProfile prof;
  prof.stripped = strip_isolated(f);
  prof.chi = chromatic_number(prof.stripped);
  prof.lemma_applicable = prof.chi <= p - 1;
  prof.family = split_closure_family(prof.stripped);
  prof.beta = param_beta(prof.family);
  prof.q = param_q(prof.family);
  prof.bipartite = bipartite_subfamily(prof.family);
  prof.b_family = family_B(prof.family, prof.beta, prof.q);
  auto u = family_U_and_mu(prof.stripped, prof.q);
  prof.u_sets = std::move(u.u_sets);
  prof.mu = u.mu;
  prof.lambda = param_lambda(prof.bipartite, prof.q);
  return prof;
}

}  // namespace spexlab
