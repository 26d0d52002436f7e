#pragma once

#include "spexlab/canonical.hpp"
#include "spexlab/graph.hpp"

namespace spexlab {

// Drop isolated vertices; error if nothing remains with an edge.
Graph strip_isolated(const Graph& f);

// Edge blow-up F^{p+1}: every edge becomes a K_{p+1} on its endpoints plus
// p-1 fresh vertices, fresh vertices distinct per edge.
Graph edge_blowup(const Graph& f, int p);

// Simultaneous vertex split F∇U: each v in U becomes d(v) independent copies,
// one per incident edge; an edge with both endpoints in U keeps one edge
// between the two dedicated copies.
Graph vertex_split(const Graph& f, VertexSet u);

// {F∇U : U ⊆ V(F)} up to isomorphism.
IsoClassSet split_closure_family(const Graph& f);

// Same family, guarded by the applicability window 2 <= chi(F) <= p-1.
IsoClassSet decomposition_family(const Graph& f, int p);

// Definition-level oracle: minimal graphs M on <= max_vertices vertices with
// F^{p+1} ⊆ (M ∪ E_t) + T_{p-1}((p-1)t) for some t <= t_max.
struct OracleResult {
  IsoClassSet family;
  int t_max = 0;
  int max_vertices = 0;
  long long candidates = 0;
};
OracleResult decomposition_family_oracle(const Graph& f, int p, int t_max = 3,
                                         int max_vertices = 8);

// Bipartite members whose independent covering number attains the family minimum.
IsoClassSet bipartite_subfamily(const IsoClassSet& family);

}  // namespace spexlab
