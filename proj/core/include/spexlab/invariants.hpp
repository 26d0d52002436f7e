#pragma once

#include <optional>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

// Maximum matching size, exact for general graphs (branching search).
int matching_number(const Graph& g);
// True iff g has a matching with more than k edges; cheaper than the full number.
bool has_matching_above(const Graph& g, int k);

// Minimum vertex cover size, exact (branching on edges).
int vertex_cover_number(const Graph& g);

// Two-coloring. Returns the side containing each component's smallest vertex
// unioned over components, or nullopt if some component is odd.
std::optional<VertexSet> bipartition_side(const Graph& g);
bool is_bipartite(const Graph& g);

// Minimum size of an independent set meeting every edge. Throws not_bipartite.
int independent_covering_number(const Graph& g);

// All independent sets of size exactly k that meet every edge, ascending as masks.
std::vector<VertexSet> independent_coverings_of_size(const Graph& g, int k);

// All vertex covers (not necessarily independent) of size strictly below k.
std::vector<VertexSet> coverings_strictly_below(const Graph& g, int k);

// Exact chromatic number; budget n <= 20.
int chromatic_number(const Graph& g);

}  // namespace spexlab
