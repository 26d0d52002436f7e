#include "spexlab/canonical.hpp"

#include <algorithm>
#include <array>

#include "spexlab/graph6.hpp"

namespace spexlab {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  int find(int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the smaller vertex as representative
    parent[static_cast<size_t>(b)] = a;
  }
  bool same(int a, int b) { return find(a) == find(b); }
};

// Split cells by neighbor counts against every cell until stable. Processing
// order depends only on cell positions and counts, so isomorphic graphs with
// corresponding partitions refine identically.
void refine(const Graph& g, std::vector<VertexSet>& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t si = 0; si < cells.size() && !changed; ++si) {
      VertexSet splitter = cells[si];
      for (size_t ci = 0; ci < cells.size() && !changed; ++ci) {
        VertexSet c = cells[ci];
        if ((c & (c - 1)) == 0) continue;
        std::array<VertexSet, 65> bucket{};
        int lo = 64, hi = 0;
        for_each_vertex(c, [&](int v) {
          int cnt = popcount(g.neighbors(v) & splitter);
          bucket[static_cast<size_t>(cnt)] |= bit(v);
          lo = std::min(lo, cnt);
          hi = std::max(hi, cnt);
        });
        if (lo == hi) continue;
        std::vector<VertexSet> repl;
        for (int cnt = lo; cnt <= hi; ++cnt)
          if (bucket[static_cast<size_t>(cnt)]) repl.push_back(bucket[static_cast<size_t>(cnt)]);
        cells.erase(cells.begin() + static_cast<long>(ci));
        cells.insert(cells.begin() + static_cast<long>(ci), repl.begin(), repl.end());
        changed = true;
      }
    }
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.vertex_count()), global_(g.vertex_count()) {}

  CanonicalResult run() {
    CanonicalResult res;
    if (n_ == 0) {
      res.form = to_graph6(g_);
      return res;
    }
    std::vector<VertexSet> cells{g_.vertex_mask()};
    search(cells);
    res.labeling = best_lab_;
    res.generators = gens_;
    res.orbit.resize(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) res.orbit[static_cast<size_t>(v)] = global_.find(v);
    std::vector<int> inv(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) inv[static_cast<size_t>(best_lab_[static_cast<size_t>(i)])] = i;
    res.form = to_graph6(relabel(g_, inv));
    return res;
  }

 private:
  // Adjacency bits of the relabeled graph in graph6 column order, 8 per byte.
  std::string leaf_key(const std::vector<int>& lab) const {
    std::string key((static_cast<size_t>(n_) * (n_ - 1) / 2 + 7) / 8, '\0');
    size_t pos = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i) {
        if (g_.has_edge(lab[static_cast<size_t>(i)], lab[static_cast<size_t>(j)]))
          key[pos >> 3] = static_cast<char>(key[pos >> 3] | (1 << (7 - (pos & 7))));
        ++pos;
      }
    return key;
  }

  void add_generator(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(static_cast<size_t>(n_));
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[static_cast<size_t>(from[static_cast<size_t>(i)])] = to[static_cast<size_t>(i)];
      identity = identity && from[static_cast<size_t>(i)] == to[static_cast<size_t>(i)];
    }
    if (identity) return;
    for (int v = 0; v < n_; ++v) global_.unite(v, gamma[static_cast<size_t>(v)]);
    gens_.push_back(std::move(gamma));
  }

  static bool fixes_cells(const std::vector<int>& gamma, const std::vector<VertexSet>& cells) {
    for (VertexSet c : cells) {
      VertexSet image = 0;
      for_each_vertex(c, [&](int v) { image |= bit(gamma[static_cast<size_t>(v)]); });
      if (image != c) return false;
    }
    return true;
  }

  void search(std::vector<VertexSet> cells) {
    refine(g_, cells);
    size_t target = cells.size();
    for (size_t i = 0; i < cells.size(); ++i)
      if (popcount(cells[i]) > 1) {
        target = i;
        break;
      }
    if (target == cells.size()) {
      std::vector<int> lab;
      lab.reserve(static_cast<size_t>(n_));
      for (VertexSet c : cells) lab.push_back(lowest(c));
      std::string key = leaf_key(lab);
      if (first_lab_.empty()) {
        first_key_ = key;
        first_lab_ = lab;
      } else if (key == first_key_) {
        add_generator(first_lab_, lab);
      }
      if (best_lab_.empty() || key < best_key_) {
        best_key_ = key;
        best_lab_ = lab;
      } else if (key == best_key_ && lab != best_lab_) {
        add_generator(best_lab_, lab);
      }
      return;
    }

    // Prune branches equivalent, under generators that stabilize this node's
    // partition cellwise, to a branch already explored.
    VertexSet cell = cells[target];
    UnionFind local(n_);
    for (auto& gamma : gens_)
      if (fixes_cells(gamma, cells))
        for (int v = 0; v < n_; ++v) local.unite(v, gamma[static_cast<size_t>(v)]);
    std::vector<int> tried;
    std::vector<int> members;
    for_each_vertex(cell, [&](int v) { members.push_back(v); });
    for (int v : members) {
      bool skip = false;
      for (int w : tried)
        if (local.same(v, w)) {
          skip = true;
          break;
        }
      if (skip) continue;
      std::vector<VertexSet> child = cells;
      child[target] = bit(v);
      child.insert(child.begin() + static_cast<long>(target) + 1, cell & ~bit(v));
      size_t mark = gens_.size();
      search(std::move(child));
      for (size_t gi = mark; gi < gens_.size(); ++gi)
        if (fixes_cells(gens_[gi], cells))
          for (int u = 0; u < n_; ++u) local.unite(u, gens_[gi][static_cast<size_t>(u)]);
      tried.push_back(v);
    }
  }

  const Graph& g_;
  int n_;
  std::string best_key_, first_key_;
  std::vector<int> best_lab_, first_lab_;
  std::vector<std::vector<int>> gens_;
  UnionFind global_;
};

}  // namespace

CanonicalResult canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace spexlab
