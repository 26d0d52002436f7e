#pragma once

#include <map>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

// Canonical labeling by iterative degree refinement plus backtracking over
// cells; the smallest relabeled adjacency string wins. Generators are the
// automorphisms discovered from equal-string leaves; their orbits equal the
// automorphism orbits of the graph.
struct CanonicalResult {
  std::vector<int> labeling;  // labeling[i] = vertex placed at position i
  std::string form;           // graph6 of the canonical representative
  std::vector<std::vector<int>> generators;
  std::vector<int> orbit;     // orbit[v] = smallest vertex in v's orbit
};

CanonicalResult canonical_labeling(const Graph& g);
std::string canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

// Set of isomorphism classes keyed (and ordered) by canonical graph6 form.
class IsoClassSet {
 public:
  // returns true if the class was new
  bool insert(const Graph& g) { return classes_.emplace(canonical_form(g), g).second; }
  bool contains(const Graph& g) const { return classes_.count(canonical_form(g)) != 0; }
  bool contains_form(const std::string& form) const { return classes_.count(form) != 0; }
  size_t size() const { return classes_.size(); }
  bool empty() const { return classes_.empty(); }
  auto begin() const { return classes_.begin(); }
  auto end() const { return classes_.end(); }

  std::vector<std::string> forms() const {
    std::vector<std::string> out;
    out.reserve(classes_.size());
    for (auto& [form, g] : classes_) out.push_back(form);
    return out;
  }

  bool operator==(const IsoClassSet& o) const {
    if (classes_.size() != o.classes_.size()) return false;
    auto it = o.classes_.begin();
    for (auto& [form, g] : classes_) {
      if (form != it->first) return false;
      ++it;
    }
    return true;
  }

 private:
  std::map<std::string, Graph> classes_;
};

}  // namespace spexlab
