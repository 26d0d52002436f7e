#pragma once

#include <functional>

#include "spexlab/graph.hpp"

namespace spexlab {

// Stream one representative per isomorphism class of graphs on exactly n
// vertices, by canonical augmentation: a child survives only when the added
// vertex sits in the same automorphism orbit as the canonically-deleted one,
// and augmenting neighborhoods are deduplicated per parent automorphism orbit.
//
// keep, when given, must be closed under taking subgraphs (if keep(G) fails,
// no supergraph of G is wanted); failing graphs are pruned with their subtree.
// Budget: n <= 10.
void enumerate_graphs(int n, const std::function<void(const Graph&)>& emit,
                      const std::function<bool(const Graph&)>& keep = nullptr);

namespace detail {
// Uncapped version used internally by callers that manage their own budgets.
void enumerate_graphs_impl(int n, const std::function<void(const Graph&)>& emit,
                           const std::function<bool(const Graph&)>& keep);
}  // namespace detail

}  // namespace spexlab
