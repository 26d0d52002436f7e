#pragma once

#include <string>

#include "spexlab/graph.hpp"

namespace spexlab {

// Standard header-free graph6 encoding, orders 0..64.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

}  // namespace spexlab
