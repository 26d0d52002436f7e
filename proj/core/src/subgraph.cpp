#include "spexlab/subgraph.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace spexlab {

namespace {

struct Matcher {
  const Graph& host;
  const Graph& pat;
  int m;                                   // pattern order
  std::vector<int> order;                  // static pattern vertex order
  std::vector<int> prev_twin;              // order position of previous same-class pattern vertex, or -1
  std::vector<VertexSet> pat_nb_before;    // pattern neighbors among earlier order positions (as position mask)
  std::vector<int> assigned;               // host vertex per order position

  Matcher(const Graph& h, const Graph& p) : host(h), pat(p), m(p.vertex_count()) {}

  // Interchangeable pattern vertices: equal open or closed neighborhoods,
  // closed under union. Any permutation inside a class extends to a pattern
  // automorphism, so images may be forced into increasing host order.
  std::vector<int> twin_class() const {
    std::vector<int> rep(static_cast<size_t>(m));
    for (int v = 0; v < m; ++v) rep[static_cast<size_t>(v)] = v;
    auto find = [&](int v) {
      while (rep[static_cast<size_t>(v)] != v) v = rep[static_cast<size_t>(v)] = rep[static_cast<size_t>(rep[static_cast<size_t>(v)])];
      return v;
    };
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v) {
        bool open = pat.neighbors(u) == pat.neighbors(v);
        bool closed = (pat.neighbors(u) | bit(u)) == (pat.neighbors(v) | bit(v));
        if (open || closed) {
          int a = find(u), b = find(v);
          if (a != b) rep[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
        }
      }
    for (int v = 0; v < m; ++v) rep[static_cast<size_t>(v)] = find(v);
    return rep;
  }

  void build_order() {
    // components largest first; inside a component grow from the max-degree
    // vertex, preferring vertices with the most placed neighbors
    std::vector<VertexSet> comps = components(pat);
    std::sort(comps.begin(), comps.end(), [&](VertexSet a, VertexSet b) {
      if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
      return a < b;
    });
    VertexSet placed = 0;
    for (VertexSet comp : comps) {
      int start = -1;
      for_each_vertex(comp, [&](int v) {
        if (start < 0 || pat.degree(v) > pat.degree(start)) start = v;
      });
      order.push_back(start);
      placed |= bit(start);
      while ((comp & ~placed) != 0) {
        int best = -1, best_back = -1;
        for_each_vertex(comp & ~placed, [&](int v) {
          int back = popcount(pat.neighbors(v) & placed);
          if (back > best_back || (back == best_back && pat.degree(v) > pat.degree(best))) {
            best = v;
            best_back = back;
          }
        });
        order.push_back(best);
        placed |= bit(best);
      }
    }

    std::vector<int> rep = twin_class();
    std::vector<int> pos(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    prev_twin.assign(static_cast<size_t>(m), -1);
    std::vector<int> last_seen(static_cast<size_t>(m), -1);
    for (int i = 0; i < m; ++i) {
      int v = order[static_cast<size_t>(i)];
      int r = rep[static_cast<size_t>(v)];
      prev_twin[static_cast<size_t>(i)] = last_seen[static_cast<size_t>(r)];
      last_seen[static_cast<size_t>(r)] = i;
    }
    pat_nb_before.assign(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
      VertexSet mask = 0;
      for (int j = 0; j < i; ++j)
        if (pat.has_edge(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)])) mask |= bit(j);
      pat_nb_before[static_cast<size_t>(i)] = mask;
    }
  }

  bool dfs(std::array<VertexSet, 64>& cand, VertexSet used, int depth) {
    if (depth == m) return true;
    VertexSet c = cand[static_cast<size_t>(depth)] & ~used;
    if (prev_twin[static_cast<size_t>(depth)] >= 0) {
      int prev_pos = prev_twin[static_cast<size_t>(depth)];
      int w = assigned[static_cast<size_t>(prev_pos)];
      c &= (w == 63) ? 0 : ~((bit(w) << 1) - 1);  // only host vertices above w
    }
    // one representative per class of mutually swappable unused host vertices
    std::array<std::pair<VertexSet, VertexSet>, 64> seen;
    size_t seen_count = 0;
    bool ok = false;
    for_each_vertex(c, [&](int w) {
      if (ok) return;
      VertexSet open = host.neighbors(w);
      VertexSet closed = open | bit(w);
      for (size_t s = 0; s < seen_count; ++s)
        if (seen[s].first == open || seen[s].second == closed) return;
      seen[seen_count++] = {open, closed};
      assigned[static_cast<size_t>(depth)] = w;
      std::array<VertexSet, 64> next = cand;
      bool dead = false;
      for (int j = depth + 1; j < m && !dead; ++j) {
        if (pat_nb_before[static_cast<size_t>(j)] & bit(depth)) next[static_cast<size_t>(j)] &= open;
        if ((next[static_cast<size_t>(j)] & ~(used | bit(w))) == 0) dead = true;
      }
      if (!dead && dfs(next, used | bit(w), depth + 1)) ok = true;
    });
    return ok;
  }

  bool run() {
    if (m == 0) return true;
    if (m > host.vertex_count() || pat.edge_count() > host.edge_count()) return false;
    // sorted degree domination is necessary
    std::vector<int> hd, pd;
    for (int v = 0; v < host.vertex_count(); ++v) hd.push_back(host.degree(v));
    for (int v = 0; v < m; ++v) pd.push_back(pat.degree(v));
    std::sort(hd.rbegin(), hd.rend());
    std::sort(pd.rbegin(), pd.rend());
    for (size_t i = 0; i < pd.size(); ++i)
      if (pd[i] > hd[i]) return false;

    build_order();
    std::array<VertexSet, 64> cand{};
    for (int i = 0; i < m; ++i) {
      VertexSet c = 0;
      int need = pat.degree(order[static_cast<size_t>(i)]);
      for (int w = 0; w < host.vertex_count(); ++w)
        if (host.degree(w) >= need) c |= bit(w);
      cand[static_cast<size_t>(i)] = c;
    }
    assigned.assign(static_cast<size_t>(m), -1);
    return dfs(cand, 0, 0);
  }
};

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  // isolated pattern vertices only need spare host vertices
  VertexSet iso = pattern.isolated_vertices();
  if (iso) {
    if (pattern.vertex_count() > host.vertex_count()) return false;
    return contains_subgraph(host, induced_subgraph(pattern, pattern.vertex_mask() & ~iso));
  }
  Matcher mm(host, pattern);
  return mm.run();
}

}  // namespace spexlab
