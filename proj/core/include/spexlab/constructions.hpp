#pragma once

#include <variant>
#include <vector>

#include "spexlab/canonical.hpp"
#include "spexlab/graph.hpp"

namespace spexlab {

// Stochastic-block-style description for hosts beyond 64 vertices: blocks are
// internally empty; link[i][j] = 1 means complete bipartite between blocks.
struct BlockModel {
  std::vector<long long> sizes;
  std::vector<std::vector<std::uint8_t>> link;

  long long vertex_count() const;
  long long edge_count() const;
};

using AnyGraph = std::variant<Graph, BlockModel>;

long long any_vertex_count(const AnyGraph& g);
long long any_edge_count(const AnyGraph& g);

// Balanced complete p-partite part sizes, descending.
std::vector<long long> turan_part_sizes(long long n, int p);
long long turan_edge_count(long long n, int p);

Graph turan_graph(int n, int p);
BlockModel turan_model(long long n, int p);

// H(n,p,q) = E_{q-1} + T_p(n-q+1); the q-1 universal vertices are independent.
Graph h_graph(int n, int p, int q);
BlockModel h_model(long long n, int p, int q);

// Exhaustive small extremal oracle: maximum edges over graphs on m vertices
// containing no forbidden member, with every extremal class. Budget m <= 9.
struct ExtremalSmall {
  int max_edges = 0;
  IsoClassSet extremal;
  long long scanned = 0;
};
ExtremalSmall ex_small(int m, const IsoClassSet& forbidden);

// H(n,p,q,d,B): H(n,p,q) with an extremal B-free graph on the q-1 universal
// vertices and a member of D_d (= family_D(d+1)) inside one Turán class.
// One member per (Q choice, D choice, distinct class size), deduplicated.
struct ConstructionFamily {
  long long n = 0;
  int p = 0, q = 0, d = 0;
  int q_part_edges = 0;         // ex(q-1, B)
  long long d_part_edges = 0;   // chvatal_hanson(d, d)
  long long edge_count = 0;     // every member has this many edges
  IsoClassSet q_choices, d_choices;
  std::vector<AnyGraph> members;
};
ConstructionFamily build_H_family(long long n, int p, int q, int d, const IsoClassSet& b_family);

long long h_edge_count(long long n, int p, int q, int d, const IsoClassSet& b_family);

// Order of every member of family_D(lambda): 0, 2*lambda, or 2*lambda - 1.
int d_member_order(int lambda);

// Whether H(n,p,q,d,B) exists at this order: p nonempty Turán classes, one of
// them wide enough for the D part.
bool h_family_fits(long long n, int p, int q, int d);

}  // namespace spexlab
