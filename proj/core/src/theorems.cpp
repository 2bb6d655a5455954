#include "spex/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "spex/canonical.hpp"
#include "spex/enumerate.hpp"
#include "spex/graph6.hpp"
#include "spex/planarity.hpp"

namespace spex {

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
  }
  return "?";
}

std::string to_string(RClass c) {
  switch (c) {
    case RClass::AllPaths: return "AllPaths";
    case RClass::SingleCycleSpanningR: return "SingleCycleSpanningR";
    case RClass::Other: return "Other";
  }
  return "?";
}

std::string to_string(RComponentKind k) {
  switch (k) {
    case RComponentKind::Path: return "path";
    case RComponentKind::Cycle: return "cycle";
    case RComponentKind::Other: return "other";
  }
  return "?";
}

std::optional<StructureWitness> structure_witness(const Graph& g) {
  int n = g.vertex_count();
  if (n < 4) throw std::invalid_argument("structure_witness: need n >= 4");
  for (int u1 = 0; u1 < n; ++u1) {
    for (int u2 = u1 + 1; u2 < n; ++u2) {
      VertexSet common = g.neighbors(u1) & g.neighbors(u2);
      if (common.count() != n - 2) continue;

      StructureWitness w;
      w.u1 = u1;
      w.u2 = u2;
      w.r = common;
      w.hub_edge = g.has_edge(u1, u2);

      // classify the components of G[R]
      std::vector<int> comp_of(n, -1);
      std::vector<int> order = common.to_vector();
      int ncomp = 0;
      for (int root : order) {
        if (comp_of[root] >= 0) continue;
        std::vector<int> stack{root};
        comp_of[root] = ncomp;
        int size = 0;
        long edges2 = 0;  // twice the edge count
        int maxdeg = 0;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          ++size;
          int deg = (g.neighbors(v) & common).count();
          edges2 += deg;
          maxdeg = std::max(maxdeg, deg);
          (g.neighbors(v) & common).for_each([&](int x) {
            if (comp_of[x] < 0) {
              comp_of[x] = ncomp;
              stack.push_back(x);
            }
          });
        }
        RComponent rc;
        rc.size = size;
        long edges = edges2 / 2;
        if (maxdeg <= 1 || (maxdeg == 2 && edges == size - 1))
          rc.kind = RComponentKind::Path;
        else if (maxdeg == 2 && edges == size && size >= 3)
          rc.kind = RComponentKind::Cycle;
        else
          rc.kind = RComponentKind::Other;
        w.components.push_back(rc);
        ++ncomp;
      }

      bool all_paths = true;
      bool any_other = false;
      for (const auto& c : w.components) {
        if (c.kind != RComponentKind::Path) all_paths = false;
        if (c.kind == RComponentKind::Other) any_other = true;
      }
      if (all_paths)
        w.r_class = RClass::AllPaths;
      else if (w.components.size() == 1 &&
               w.components[0].kind == RComponentKind::Cycle)
        w.r_class = RClass::SingleCycleSpanningR;
      else
        w.r_class = RClass::Other;
      w.consistent = !any_other &&
                     (w.r_class == RClass::AllPaths ||
                      (w.r_class == RClass::SingleCycleSpanningR && !w.hub_edge));
      return w;
    }
  }
  return std::nullopt;
}

namespace {

struct Extremum {
  double max_rho = -1.0;
  std::vector<std::pair<double, std::string>> near;  // rho, canonical g6
  long examined = 0;

  void offer(double rho, const std::string& g6, double tie_tol) {
    ++examined;
    if (rho > max_rho) {
      max_rho = rho;
      std::erase_if(near, [&](const auto& p) { return p.first < max_rho - tie_tol; });
    }
    if (rho >= max_rho - tie_tol) near.emplace_back(rho, g6);
  }

  std::vector<std::string> argmax(double tie_tol) const {
    std::vector<std::string> out;
    for (const auto& [rho, g6] : near)
      if (rho >= max_rho - tie_tol) out.push_back(g6);
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Evaluates rho for a batch of graphs, split across threads; slot-based
// results keep the reduction order independent of scheduling.
void eval_batch(const std::vector<Graph>& batch, std::vector<double>& rhos,
                int threads, const SpectralOptions& spectral) {
  rhos.resize(batch.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      rhos[i] = spectral_radius(batch[i], spectral).rho;
  };
  if (threads <= 1 || batch.size() < 2) {
    work(0, batch.size());
    return;
  }
  std::size_t nthreads = std::min<std::size_t>(threads, batch.size());
  std::vector<std::thread> pool;
  std::size_t chunk = (batch.size() + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    std::size_t begin = t * chunk;
    std::size_t end = std::min(batch.size(), begin + chunk);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  for (auto& th : pool) th.join();
}

Extremum search_connected(int n, const ForbiddenPattern& pattern,
                          const SearchOptions& opts) {
  Extremum ext;
  EnumerationConfig cfg;
  cfg.n = n;
  cfg.connected_only = true;
  cfg.planar_only = true;
  cfg.pattern = pattern;

  constexpr std::size_t kBatch = 1024;
  std::vector<Graph> batch;
  std::vector<double> rhos;
  auto flush = [&]() {
    eval_batch(batch, rhos, opts.threads, opts.spectral);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ext.offer(rhos[i], to_graph6(batch[i]), opts.tie_tolerance);
      if (opts.per_graph) opts.per_graph(batch[i], rhos[i]);
    }
    batch.clear();
  };
  enumerate_graphs(cfg, [&](const Graph& g) {
    batch.push_back(g);
    if (batch.size() >= kBatch) flush();
    return true;
  });
  flush();
  return ext;
}

std::optional<Graph> paper_family_for(int n, const ForbiddenPattern& pattern) {
  switch (pattern.kind()) {
    case ForbiddenPattern::Kind::Wheel:
      if (n >= pattern.parameter() + 1) return family_w(n, pattern.parameter());
      return std::nullopt;
    case ForbiddenPattern::Kind::Friendship:
      if (n >= 2 * pattern.parameter() + 1) return family_f(n, pattern.parameter());
      return std::nullopt;
    case ForbiddenPattern::Kind::Matching: {
      int k = pattern.parameter() - 1;
      if (k >= 1 && n >= 2 * k) return family_m(n, k);
      return std::nullopt;
    }
    case ForbiddenPattern::Kind::Generic: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

SearchReport spex_search(int n, const ForbiddenPattern& pattern,
                         const SearchOptions& opts) {
  if (opts.tie_tolerance <= 0)
    throw std::invalid_argument("spex_search: tie tolerance must be positive");
  auto t0 = std::chrono::steady_clock::now();

  SearchReport report;
  report.n = n;
  report.pattern = pattern.to_string();
  report.tie_tolerance = opts.tie_tolerance;

  Extremum ext = search_connected(n, pattern, opts);
  report.examined = ext.examined;
  if (ext.examined > 0) {
    report.max_rho = ext.max_rho;
    report.argmax = ext.argmax(opts.tie_tolerance);
  }

  if (auto fam = paper_family_for(n, pattern)) {
    std::string canon = to_graph6(canonical_form(*fam));
    report.matches_paper_family =
        report.argmax.size() == 1 && report.argmax.front() == canon;
  }

  if (opts.include_disconnected) {
    // a disconnected candidate's rho equals the rho of one of its components,
    // i.e. of a connected pattern-free planar graph on fewer vertices
    SearchOptions sub = opts;
    sub.include_disconnected = false;
    sub.per_graph = nullptr;
    Extremum best;
    int best_m = 0;
    for (int m = 1; m < n; ++m) {
      Extremum e = search_connected(m, pattern, sub);
      if (e.examined > 0 && e.max_rho > best.max_rho) {
        best = e;
        best_m = m;
      }
    }
    if (best_m > 0) {
      report.best_smaller_n = best_m;
      report.best_smaller_rho = best.max_rho;
      report.best_smaller_argmax = best.argmax(opts.tie_tolerance);
    }
  }

  auto t1 = std::chrono::steady_clock::now();
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return report;
}

TheoremReport verify_theorem(int n, int k, TheoremId which,
                             const VerifyOptions& opts) {
  TheoremReport rep;
  rep.which = which;
  rep.n = n;
  rep.k = k;

  Graph family;
  ForbiddenPattern pattern = ForbiddenPattern::matching_m(1);
  std::optional<double> closed;
  switch (which) {
    case TheoremId::T2:
      family = family_w(n, k);
      pattern = ForbiddenPattern::wheel_k(k);
      if (k == 3) closed = closed_form_rho_k2_bar(n);
      break;
    case TheoremId::T3:
      family = family_f(n, k);
      pattern = ForbiddenPattern::friendship_k(k);
      if (k == 1) closed = closed_form_rho_k2_bar(n);
      if (k == 2) closed = closed_form_rho_book(n);
      break;
    case TheoremId::T4:
      family = family_m(n, k);
      pattern = ForbiddenPattern::matching_m(k + 1);
      if (k == 1) closed = std::sqrt(static_cast<double>(n - 1));  // star
      if (k == 2) closed = closed_form_rho_book(n);
      break;
  }

  rep.family_g6 = to_graph6(family);
  rep.planar = is_planar(family).planar;
  rep.pattern_free = is_pattern_free(family, pattern);
  if (which == TheoremId::T4) {
    rep.matching = matching_number(family);
    rep.matching_ok = (*rep.matching == k);
  }
  rep.rho = spectral_radius(family, opts.spectral).rho;
  rep.closed_form = closed;
  if (closed) rep.closed_form_ok = std::abs(rep.rho - *closed) <= 1e-8;
  rep.hard_assertions_pass =
      rep.planar && rep.pattern_free && rep.matching_ok && rep.closed_form_ok;

  if (n <= opts.search_cap) {
    SearchOptions sopts = opts.search;
    sopts.spectral = opts.spectral;
    rep.search = spex_search(n, pattern, sopts);
    rep.search_ran = true;
    std::string canon = to_graph6(canonical_form(family));
    rep.argmax_is_family = rep.search->argmax.size() == 1 &&
                           rep.search->argmax.front() == canon;
  }
  return rep;
}

}  // namespace spex
