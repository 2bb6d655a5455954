#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "spex/planarity.hpp"

namespace spex::oracle {

namespace {

// Searches for a subdivision of a fixed pattern: assign branch vertices
// injectively, then route internally-disjoint paths for every pattern edge.
// A direct host edge is always taken when available (it consumes no internal
// vertices, so it never hurts).
class SubdivisionSearch {
 public:
  SubdivisionSearch(const Graph& g, std::vector<int> degrees,
                    std::vector<std::pair<int, int>> edges,
                    std::vector<int> symmetry_chains)
      : g_(g),
        degrees_(std::move(degrees)),
        edges_(std::move(edges)),
        chains_(std::move(symmetry_chains)),
        branch_(degrees_.size(), -1),
        used_(g.vertex_count()) {}

  bool found() { return assign(0); }

 private:
  bool assign(std::size_t idx) {
    if (idx == branch_.size()) return route(0);
    for (int h = 0; h < g_.vertex_count(); ++h) {
      if (used_.test(h) || g_.degree(h) < degrees_[idx]) continue;
      // break branch-vertex symmetry: increasing within a chain
      if (chains_[idx] >= 0 && h <= branch_[chains_[idx]]) continue;
      branch_[idx] = h;
      used_.set(h);
      if (assign(idx + 1)) return true;
      used_.reset(h);
      branch_[idx] = -1;
    }
    return false;
  }

  bool route(std::size_t edge_idx) {
    if (edge_idx == edges_.size()) return true;
    auto [a, b] = edges_[edge_idx];
    int from = branch_[a], to = branch_[b];
    if (g_.has_edge(from, to)) return route(edge_idx + 1);
    return extend(from, to, edge_idx);
  }

  bool extend(int cur, int target, std::size_t edge_idx) {
    bool ok = false;
    g_.neighbors(cur).for_each([&](int w) {
      if (ok || used_.test(w) || w == target) return;
      used_.set(w);
      if (g_.has_edge(w, target) ? route(edge_idx + 1) : extend(w, target, edge_idx))
        ok = true;
      used_.reset(w);
    });
    return ok;
  }

  const Graph& g_;
  std::vector<int> degrees_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> chains_;  // per branch: previous vertex in its symmetry chain
  std::vector<int> branch_;
  VertexSet used_;
};

bool has_k5_subdivision(const Graph& g) {
  SubdivisionSearch s(g, {4, 4, 4, 4, 4},
                      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                       {2, 3}, {2, 4}, {3, 4}},
                      {-1, 0, 1, 2, 3});  // fully interchangeable
  return s.found();
}

bool has_k33_subdivision(const Graph& g) {
  // sides {0,1,2} and {3,4,5}, increasing within each side
  SubdivisionSearch s(g, {3, 3, 3, 3, 3, 3},
                      {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                       {2, 3}, {2, 4}, {2, 5}},
                      {-1, 0, 1, -1, 3, 4});
  return s.found();
}

}  // namespace

bool planar_by_kuratowski(const Graph& g) {
  return !has_k5_subdivision(g) && !has_k33_subdivision(g);
}

double rho_dense(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("rho_dense: need n >= 1");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v)
    g.neighbors(v).for_each([&](int w) { a(v, w) = 1.0; });
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

int matching_bruteforce(const Graph& g) {
  int n = g.vertex_count();
  if (n > 22) throw std::invalid_argument("matching_bruteforce: n too large");
  std::vector<signed char> dp(std::size_t(1) << n, -1);
  dp[0] = 0;
  std::vector<std::uint32_t> nb(n, 0);
  for (int v = 0; v < n; ++v)
    g.neighbors(v).for_each([&](int w) { nb[v] |= 1u << w; });

  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int v = std::countr_zero(mask);
    int best = dp[mask & (mask - 1)];  // v unmatched
    std::uint32_t partners = nb[v] & mask;
    while (partners) {
      int w = std::countr_zero(partners);
      partners &= partners - 1;
      best = std::max<int>(best, 1 + dp[mask & ~(1u << v) & ~(1u << w)]);
    }
    dp[mask] = static_cast<signed char>(best);
  }
  return dp[(std::size_t(1) << n) - 1];
}

namespace {

bool injection_extend(const Graph& g, const Graph& f, std::vector<int>& map,
                      VertexSet& used, int depth) {
  int fn = f.vertex_count();
  if (depth == fn) {
    for (int u = 0; u < fn; ++u) {
      bool bad = false;
      f.neighbors(u).for_each([&](int v) {
        if (v > u && !g.has_edge(map[u], map[v])) bad = true;
      });
      if (bad) return false;
    }
    return true;
  }
  for (int h = 0; h < g.vertex_count(); ++h) {
    if (used.test(h)) continue;
    map[depth] = h;
    used.set(h);
    if (injection_extend(g, f, map, used, depth + 1)) return true;
    used.reset(h);
  }
  return false;
}

}  // namespace

bool contains_by_injection(const Graph& g, const Graph& f) {
  if (f.vertex_count() > g.vertex_count()) return false;
  std::vector<int> map(f.vertex_count(), -1);
  VertexSet used(g.vertex_count());
  return injection_extend(g, f, map, used, 0);
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng() % (i + 1)]);
  return perm;
}

Graph random_graph(std::mt19937_64& rng, int n, int edge_target) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[rng() % i]);
  Graph g(n);
  for (std::size_t i = 0; i < pairs.size() && g.edge_count() < edge_target; ++i)
    g.add_edge(pairs[i].first, pairs[i].second);
  return g;
}

Graph random_connected_planar(std::mt19937_64& rng, int n, int edge_target) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j)) pairs.emplace_back(i, j);
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[rng() % i]);
  for (const auto& [a, b] : pairs) {
    if (g.edge_count() >= edge_target) break;
    g.add_edge(a, b);
    if (!is_planar(g).planar) {
      // remove again: rebuild without the offending edge
      Graph h(n);
      for (int v = 0; v < n; ++v)
        g.neighbors(v).for_each([&](int w) {
          if (w > v && !(v == a && w == b)) h.add_edge(v, w);
        });
      g = h;
    }
  }
  return g;
}

}  // namespace spex::oracle
