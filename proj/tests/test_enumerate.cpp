#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "spexlab/canonical.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/errors.hpp"
#include "spexlab/invariants.hpp"
#include "spexlab/subgraph.hpp"

using namespace spexlab;
using namespace spexlab::test;

namespace {

std::vector<Graph> collect(int n, const std::function<bool(const Graph&)>& keep = nullptr) {
  std::vector<Graph> out;
  enumerate_graphs(
      n, [&](const Graph& g) { out.push_back(g); }, keep);
  return out;
}

// Exhaustive reference: one brute canonical code per labeled graph.
std::set<std::uint64_t> all_codes(int n, const std::function<bool(const Graph&)>& keep = nullptr) {
  std::set<std::uint64_t> codes;
  int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g(n);
    int pos = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++pos)
        if (mask & (std::uint64_t{1} << pos)) g.add_edge(u, v);
    if (!keep || keep(g)) codes.insert(brute_canonical_code(g));
  }
  return codes;
}

}  // namespace

TEST_CASE("class counts for small orders") {
  const long long want[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) CHECK(collect(n).size() == static_cast<std::size_t>(want[n]));
}

TEST_CASE("output is complete and duplicate-free against labeled-graph dedup") {
  for (int n = 0; n <= 5; ++n) {
    std::set<std::uint64_t> got;
    for (const Graph& g : collect(n)) {
      CHECK(g.vertex_count() == n);
      CHECK(got.insert(brute_canonical_code(g)).second);  // no class repeats
    }
    CHECK(got == all_codes(n));
  }
}

TEST_CASE("subgraph-closed pruning keeps exactly the passing classes") {
  auto triangle_free = [](const Graph& g) { return !contains_subgraph(g, complete_graph(3)); };
  auto degree_capped = [](const Graph& g) { return g.max_degree() <= 2; };
  for (int n = 4; n <= 6; ++n) {
    for (auto keep : {std::function<bool(const Graph&)>(triangle_free),
                      std::function<bool(const Graph&)>(degree_capped)}) {
      std::set<std::uint64_t> pruned;
      for (const Graph& g : collect(n, keep)) {
        CHECK(keep(g));
        pruned.insert(brute_canonical_code(g));
      }
      std::set<std::uint64_t> filtered;
      for (const Graph& g : collect(n))
        if (keep(g)) filtered.insert(brute_canonical_code(g));
      CHECK(pruned == filtered);
    }
  }
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(collect(11), Error);
  CHECK_THROWS_AS(collect(-1), Error);
}
