#include "spexlab/constructions.hpp"

#include <algorithm>

#include "spexlab/enumerate.hpp"
#include "spexlab/params.hpp"
#include "spexlab/subgraph.hpp"

namespace spexlab {

long long BlockModel::vertex_count() const {
  long long n = 0;
  for (long long s : sizes) n += s;
  return n;
}

long long BlockModel::edge_count() const {
  long long e = 0;
  for (size_t i = 0; i < sizes.size(); ++i)
    for (size_t j = i + 1; j < sizes.size(); ++j)
      if (link[i][j]) e += sizes[i] * sizes[j];
  return e;
}

long long any_vertex_count(const AnyGraph& g) {
  if (std::holds_alternative<Graph>(g)) return std::get<Graph>(g).vertex_count();
  return std::get<BlockModel>(g).vertex_count();
}

long long any_edge_count(const AnyGraph& g) {
  if (std::holds_alternative<Graph>(g)) return std::get<Graph>(g).edge_count();
  return std::get<BlockModel>(g).edge_count();
}

std::vector<long long> turan_part_sizes(long long n, int p) {
  check(p >= 1, errc::invalid_parameters, "need at least one class");
  check(n >= 0, errc::invalid_parameters, "negative order");
  std::vector<long long> sizes(static_cast<size_t>(p), n / p);
  for (long long i = 0; i < n % p; ++i) ++sizes[static_cast<size_t>(i)];
  return sizes;
}

long long turan_edge_count(long long n, int p) {
  long long sq = 0;
  for (long long s : turan_part_sizes(n, p)) sq += s * s;
  return (n * n - sq) / 2;
}

Graph turan_graph(int n, int p) {
  auto sizes = turan_part_sizes(n, p);
  Graph g(n);
  std::vector<int> cls(static_cast<size_t>(n));
  int at = 0, c = 0;
  for (long long s : sizes) {
    for (long long i = 0; i < s; ++i) cls[static_cast<size_t>(at++)] = c;
    ++c;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (cls[static_cast<size_t>(u)] != cls[static_cast<size_t>(v)]) g.add_edge(u, v);
  return g;
}

BlockModel turan_model(long long n, int p) {
  BlockModel bm;
  bm.sizes = turan_part_sizes(n, p);
  while (!bm.sizes.empty() && bm.sizes.back() == 0) bm.sizes.pop_back();
  size_t k = bm.sizes.size();
  bm.link.assign(k, std::vector<std::uint8_t>(k, 1));
  for (size_t i = 0; i < k; ++i) bm.link[i][i] = 0;
  return bm;
}

Graph h_graph(int n, int p, int q) {
  check(q >= 1, errc::invalid_parameters, "need q >= 1");
  check(n - q + 1 >= p, errc::invalid_parameters, "order too small for the Turán part");
  return join(Graph(q - 1), turan_graph(n - q + 1, p));
}

BlockModel h_model(long long n, int p, int q) {
  check(q >= 1, errc::invalid_parameters, "need q >= 1");
  check(n - q + 1 >= p, errc::invalid_parameters, "order too small for the Turán part");
  BlockModel bm = turan_model(n - q + 1, p);
  size_t k = bm.sizes.size();
  if (q > 1) {
    bm.sizes.insert(bm.sizes.begin(), q - 1);
    std::vector<std::vector<std::uint8_t>> link(k + 1, std::vector<std::uint8_t>(k + 1, 1));
    link[0][0] = 0;
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) link[i + 1][j + 1] = bm.link[i][j];
    bm.link = std::move(link);
  }
  return bm;
}

ExtremalSmall ex_small(int m, const IsoClassSet& forbidden) {
  check(m >= 0 && m <= 9, errc::budget_exceeded, "exhaustive extremal search limited to 9 vertices");
  check(!forbidden.empty(), errc::empty_family, "no forbidden graphs given");
  ExtremalSmall res;
  res.max_edges = -1;
  auto free_of_forbidden = [&](const Graph& g) {
    for (auto& [form, f] : forbidden)
      if (contains_subgraph(g, f)) return false;
    return true;
  };
  detail::enumerate_graphs_impl(
      m,
      [&](const Graph& g) {
        ++res.scanned;
        int e = g.edge_count();
        if (e > res.max_edges) {
          res.max_edges = e;
          res.extremal = IsoClassSet();
        }
        if (e == res.max_edges) res.extremal.insert(g);
      },
      free_of_forbidden);
  check(res.max_edges >= 0, errc::empty_family, "every graph on m vertices is forbidden");
  return res;
}

namespace {

// Explicit member: universal part carries Q, first class of size `host_size`
// carries D. Classes descending, universal vertices first.
Graph assemble_member(int n, int p, int q, const Graph& qg, const Graph& dg, long long host_size) {
  auto sizes = turan_part_sizes(n - q + 1, p);
  Graph g = h_graph(n, p, q);
  for (auto [u, v] : qg.edges()) g.add_edge(u, v);
  long long at = q - 1;
  for (long long s : sizes) {
    if (s == host_size) {
      for (auto [u, v] : dg.edges())
        g.add_edge(static_cast<int>(at) + u, static_cast<int>(at) + v);
      break;
    }
    at += s;
  }
  return g;
}

BlockModel assemble_member_model(long long n, int p, int q, const Graph& qg, const Graph& dg,
                                 long long host_size) {
  auto sizes = turan_part_sizes(n - q + 1, p);
  // blocks: q-1 universal singletons, then per class: D singletons (first class
  // of the host size) followed by the bulk remainder
  std::vector<long long> bsizes;
  std::vector<int> dvertex;  // block index of each D vertex
  int host_class = -1;
  for (size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] == host_size) {
      host_class = static_cast<int>(i);
      break;
    }
  check(host_class >= 0, errc::internal_invariant, "host class size missing");
  for (int i = 0; i < q - 1; ++i) bsizes.push_back(1);
  std::vector<std::pair<long long, long long>> class_span;  // block range per class
  for (size_t i = 0; i < sizes.size(); ++i) {
    long long first = static_cast<long long>(bsizes.size());
    if (static_cast<int>(i) == host_class) {
      for (int v = 0; v < dg.vertex_count(); ++v) {
        dvertex.push_back(static_cast<int>(bsizes.size()));
        bsizes.push_back(1);
      }
      if (sizes[i] > dg.vertex_count()) bsizes.push_back(sizes[i] - dg.vertex_count());
    } else {
      bsizes.push_back(sizes[i]);
    }
    class_span.emplace_back(first, static_cast<long long>(bsizes.size()));
  }
  size_t k = bsizes.size();
  BlockModel bm;
  bm.sizes = bsizes;
  bm.link.assign(k, std::vector<std::uint8_t>(k, 0));
  auto connect = [&](size_t a, size_t b) {
    if (a != b) bm.link[a][b] = bm.link[b][a] = 1;
  };
  // universal vertices meet everything, and each other per Q
  for (int i = 0; i < q - 1; ++i)
    for (size_t j = static_cast<size_t>(q - 1); j < k; ++j) connect(static_cast<size_t>(i), j);
  for (auto [u, v] : qg.edges()) connect(static_cast<size_t>(u), static_cast<size_t>(v));
  // distinct classes are completely joined
  for (size_t a = 0; a < class_span.size(); ++a)
    for (size_t b = a + 1; b < class_span.size(); ++b)
      for (long long i = class_span[a].first; i < class_span[a].second; ++i)
        for (long long j = class_span[b].first; j < class_span[b].second; ++j)
          connect(static_cast<size_t>(i), static_cast<size_t>(j));
  // D edges inside the host class
  for (auto [u, v] : dg.edges())
    connect(static_cast<size_t>(dvertex[static_cast<size_t>(u)]),
            static_cast<size_t>(dvertex[static_cast<size_t>(v)]));
  return bm;
}

}  // namespace

ConstructionFamily build_H_family(long long n, int p, int q, int d, const IsoClassSet& b_family) {
  check(p >= 2, errc::invalid_parameters, "need p >= 2");
  check(q >= 1, errc::invalid_parameters, "need q >= 1");
  check(d >= 0, errc::invalid_parameters, "negative D index");
  check(n <= 1'000'000'000LL, errc::capacity_exceeded, "order limited to 1e9");
  check(n - q + 1 >= p, errc::invalid_parameters, "order too small for the Turán part");

  ConstructionFamily fam;
  fam.n = n;
  fam.p = p;
  fam.q = q;
  fam.d = d;
  auto exq = ex_small(q - 1, b_family);
  fam.q_part_edges = exq.max_edges;
  fam.q_choices = exq.extremal;
  fam.d_choices = family_D(d + 1);
  fam.d_part_edges = chvatal_hanson(d, d);

  auto sizes = turan_part_sizes(n - q + 1, p);
  std::vector<long long> distinct;
  for (long long s : sizes)
    if (distinct.empty() || distinct.back() != s) distinct.push_back(s);

  long long dn = 0;
  for (auto& [form, dg] : fam.d_choices) dn = dg.vertex_count();
  bool fits = false;
  for (long long s : distinct) fits = fits || s >= dn;
  check(fits, errc::invalid_parameters, "no Turán class can hold the D part");

  fam.edge_count = static_cast<long long>(q - 1) * (n - q + 1) + turan_edge_count(n - q + 1, p) +
                   fam.q_part_edges + fam.d_part_edges;

  IsoClassSet dedup;
  for (auto& [qform, qg] : fam.q_choices) {
    for (auto& [dform, dg] : fam.d_choices) {
      for (long long s : distinct) {
        if (s < dg.vertex_count()) continue;
        if (n <= Graph::kMaxVertices) {
          Graph member = assemble_member(static_cast<int>(n), p, q, qg, dg, s);
          check(member.edge_count() == fam.edge_count, errc::internal_invariant,
                "member edge count disagrees with the closed form");
          if (dedup.insert(member)) fam.members.emplace_back(std::move(member));
        } else {
          BlockModel member = assemble_member_model(n, p, q, qg, dg, s);
          check(member.edge_count() == fam.edge_count, errc::internal_invariant,
                "member edge count disagrees with the closed form");
          fam.members.emplace_back(std::move(member));
        }
        if (dg.vertex_count() == 0) break;  // host class is irrelevant
      }
    }
  }
  return fam;
}

long long h_edge_count(long long n, int p, int q, int d, const IsoClassSet& b_family) {
  check(n - q + 1 >= p, errc::invalid_parameters, "order too small for the Turán part");
  return static_cast<long long>(q - 1) * (n - q + 1) + turan_edge_count(n - q + 1, p) +
         ex_small(q - 1, b_family).max_edges + chvatal_hanson(d, d);
}

int d_member_order(int lambda) {
  check(lambda >= 1, errc::invalid_parameters, "lambda must be positive");
  if (lambda == 1) return 0;
  return lambda % 2 ? 2 * lambda : 2 * lambda - 1;
}

bool h_family_fits(long long n, int p, int q, int d) {
  if (q < 1 || p < 2 || n - q + 1 < p) return false;
  long long largest = (n - q + 1 + p - 1) / p;
  return largest >= d_member_order(d + 1);
}

}  // namespace spexlab
