#pragma once

#include "spexlab/graph.hpp"

namespace spexlab {

// Non-induced subgraph containment: does host have a (not necessarily induced)
// subgraph isomorphic to pattern?
bool contains_subgraph(const Graph& host, const Graph& pattern);

}  // namespace spexlab
