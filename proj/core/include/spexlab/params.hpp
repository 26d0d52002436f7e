#pragma once

#include "spexlab/canonical.hpp"
#include "spexlab/graph.hpp"

namespace spexlab {

// Minimum vertex cover number over the family.
int param_beta(const IsoClassSet& family);

// Minimum independent covering number over the bipartite members.
int param_q(const IsoClassSet& family);

// If beta == q this is {K_q}; otherwise all induced subgraphs M[S] over
// covers S with |S| < q, reduced to subgraph-minimal members.
IsoClassSet family_B(const IsoClassSet& family, int beta, int q);

// Subsets U with V(F)\U independent and q(F∇U) = q, plus the least maximum
// F-degree inside any such U.
struct UFamilyResult {
  std::vector<VertexSet> u_sets;
  int mu = 0;
};
UFamilyResult family_U_and_mu(const Graph& f, int q);

// Least degree of a vertex lying in a size-q independent covering of a member
// of the bipartite subfamily.
int param_lambda(const IsoClassSet& mstar, int q);

// Max edges with matching number <= nu and max degree <= delta.
long long chvatal_hanson(int nu, int delta);

// Extremal graphs D_{lambda-1} appended inside one Turán class: {E_0} for
// lambda = 1, {2K_lambda} for odd lambda, and for even lambda every graph on
// 2*lambda - 1 vertices with chvatal_hanson(lambda-1, lambda-1) edges and max
// degree lambda - 1 (enumeration budget: even lambda <= 6).
IsoClassSet family_D(int lambda);

struct ParamProfile {
  int chi = 0;
  bool lemma_applicable = false;
  int beta = 0;
  int q = 0;
  int mu = 0;
  int lambda = 0;
  IsoClassSet family;     // decomposition family M
  IsoClassSet bipartite;  // members attaining q
  IsoClassSet b_family;
  std::vector<VertexSet> u_sets;  // relative to the stripped forbidden graph
  Graph stripped;
};
ParamProfile compute_profile(const Graph& f, int p);

}  // namespace spexlab
