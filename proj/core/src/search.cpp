#include "spexlab/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <thread>
#include <vector>

#include "spexlab/blowup.hpp"
#include "spexlab/constructions.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/errors.hpp"
#include "spexlab/subgraph.hpp"

namespace spexlab {

namespace {

// Deterministic parallel map: results land by index, so the worker count
// never changes the output.
template <typename In, typename Out, typename Fn>
std::vector<Out> parallel_map(const std::vector<In>& items, int workers, Fn fn) {
  std::vector<Out> out(items.size());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(items.size())));
  if (workers <= 1) {
    for (size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (size_t i = static_cast<size_t>(w); i < items.size(); i += static_cast<size_t>(workers))
        out[i] = fn(items[i]);
    });
  for (auto& t : pool) t.join();
  return out;
}

std::vector<Graph> free_classes(int n, const Graph& blow) {
  std::vector<Graph> out;
  detail::enumerate_graphs_impl(
      n, [&](const Graph& g) { out.push_back(g); },
      [&](const Graph& g) { return !contains_subgraph(g, blow); });
  return out;
}

}  // namespace

bool is_blowup_free(const Graph& g, const Graph& f, int p) {
  return !contains_subgraph(g, edge_blowup(strip_isolated(f), p));
}

ExResult ex_bruteforce(int n, const Graph& f, int p) {
  check(n >= 0 && n <= 10, errc::budget_exceeded, "edge oracle limited to 10 vertices");
  Graph blow = edge_blowup(strip_isolated(f), p);
  ExResult res;
  detail::enumerate_graphs_impl(
      n,
      [&](const Graph& g) {
        ++res.enumerated;
        int e = g.edge_count();
        if (e > res.max_edges) {
          res.max_edges = e;
          res.classes = IsoClassSet();
        }
        if (e == res.max_edges) res.classes.insert(g);
      },
      [&](const Graph& g) { return !contains_subgraph(g, blow); });
  return res;
}

SpexResult spex_bruteforce(int n, const Graph& f, int p, double tol, bool allow_n10, int workers) {
  check(n >= 1 && n <= (allow_n10 ? 10 : 9), errc::budget_exceeded,
        "spectral oracle limited to 9 vertices (10 behind a flag)");
  Graph blow = edge_blowup(strip_isolated(f), p);
  std::vector<Graph> classes = free_classes(n, blow);
  std::vector<SpectralResult> radii = parallel_map<Graph, SpectralResult>(
      classes, workers, [&](const Graph& g) { return spectral_radius(g, tol); });

  SpexResult res;
  res.enumerated = static_cast<long long>(classes.size());
  double best_lo = -1.0;
  size_t best_at = 0;
  for (size_t i = 0; i < classes.size(); ++i) {
    double lo = radii[i].rho - radii[i].residual;
    if (lo > best_lo) {
      best_lo = lo;
      best_at = i;
    }
  }
  check(!classes.empty(), errc::empty_family, "no free class exists");
  res.value = radii[best_at].rho;
  res.residual = radii[best_at].residual;
  for (size_t i = 0; i < classes.size(); ++i)
    if (radii[i].rho + radii[i].residual >= best_lo) res.classes.insert(classes[i]);
  return res;
}

ClimbResult hillclimb_spex(int n, const Graph& f, int p, long long iters, std::uint64_t seed,
                           double tol, const std::optional<Graph>& start) {
  check(n >= 1 && n <= Graph::kMaxVertices, errc::budget_exceeded, "order above vertex capacity");
  check(iters >= 0, errc::invalid_parameters, "negative iteration count");
  Graph blow = edge_blowup(strip_isolated(f), p);
  std::mt19937_64 rng(seed);
  auto pick = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

  Graph g(n);
  if (start) {
    check(start->vertex_count() == n, errc::invalid_parameters, "start graph has wrong order");
    check(!contains_subgraph(*start, blow), errc::invalid_parameters, "start graph is not free");
    g = *start;
  } else {
    for (long long a = 0; a < 4LL * n * n; ++a) {
      int u = pick(), v = pick();
      if (u == v || g.has_edge(u, v)) continue;
      g.add_edge(u, v);
      if (contains_subgraph(g, blow)) g.remove_edge(u, v);
    }
  }

  ClimbResult res;
  res.best = g;
  res.spectral = spectral_radius(g, tol);
  for (long long it = 0; it < iters; ++it) {
    int u = pick(), v = pick();
    // deleting an edge never raises the radius, so only additions are tried
    if (u == v || res.best.has_edge(u, v)) continue;
    res.best.add_edge(u, v);
    if (contains_subgraph(res.best, blow)) {
      res.best.remove_edge(u, v);
      continue;
    }
    SpectralResult cand = spectral_radius(res.best, tol);
    if (cand.rho - cand.residual > res.spectral.rho + res.spectral.residual) {
      res.spectral = cand;
      ++res.accepted;
    } else {
      res.best.remove_edge(u, v);
    }
  }
  return res;
}

SearchReport verify_instance(int n, const Graph& f, int p, const ParamProfile& profile, double tol,
                             int workers, int spex_max_n) {
  auto t0 = std::chrono::steady_clock::now();
  Graph stripped = strip_isolated(f);
  Graph blow = edge_blowup(stripped, p);
  SearchReport rep;
  rep.n = n;
  rep.p = p;
  rep.f = canonical_form(stripped);

  std::optional<ConstructionFamily> lower;
  if (h_family_fits(n, p, profile.q, 0))
    lower = build_H_family(n, p, profile.q, 0, profile.b_family);
  std::optional<ConstructionFamily> upper;
  if (h_family_fits(n, p, profile.q, profile.lambda - 1))
    upper = build_H_family(n, p, profile.q, profile.lambda - 1, profile.b_family);

  rep.construction_free_ok = true;
  auto check_members = [&](const ConstructionFamily& fam) {
    for (const AnyGraph& m : fam.members) {
      check(std::holds_alternative<Graph>(m), errc::budget_exceeded,
            "freeness check needs explicit members");
      if (contains_subgraph(std::get<Graph>(m), blow)) rep.construction_free_ok = false;
    }
  };
  if (lower) check_members(*lower);
  if (upper) check_members(*upper);
  if (n - profile.q + 1 >= p) {
    Graph h = h_graph(n, p, profile.q);
    if (contains_subgraph(h, blow)) rep.construction_free_ok = false;
  }

  if (n <= 10) {
    ExResult ex = ex_bruteforce(n, stripped, p);
    rep.ex_value = ex.max_edges;
    rep.ex_classes = ex.classes;
    rep.enumerated_count = ex.enumerated;
  }
  if (n <= 9 && n <= spex_max_n) {
    SpexResult spex = spex_bruteforce(n, stripped, p, tol, false, workers);
    rep.spex_value = spex.value;
    rep.spex_residual = spex.residual;
    rep.spex_classes = spex.classes;
    rep.enumerated_count = spex.enumerated;
  }

  if (rep.spex_value && rep.ex_value) {
    bool subset = true;
    for (auto& [form, g] : rep.spex_classes)
      if (!rep.ex_classes.contains_form(form)) subset = false;
    rep.spex_subset_ex = subset;
  }

  auto family_rho = [&](const ConstructionFamily& fam) {
    SpectralResult best;
    bool have = false;
    for (const AnyGraph& m : fam.members) {
      SpectralResult r = spectral_radius(m, tol);
      if (!have || r.rho > best.rho) {
        best = r;
        have = true;
      }
    }
    check(have, errc::empty_family, "construction family has no members");
    return best;
  };

  std::optional<SpectralResult> lo;
  if (lower) {
    lo = family_rho(*lower);
    rep.rho_h_lower = lo->rho;
  }
  std::optional<SpectralResult> up;
  if (upper) {
    up = family_rho(*upper);
    rep.rho_h_upper = up->rho;
  }
  if (lo) {
    if (rep.spex_value)
      rep.sandwich_lower_ok = lo->rho - lo->residual <= *rep.spex_value + rep.spex_residual;
    else
      rep.sandwich_lower_ok = rep.construction_free_ok;
  }
  if (rep.spex_value && up)
    rep.upper_strict_ok = *rep.spex_value + rep.spex_residual < up->rho - up->residual;

  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace spexlab
