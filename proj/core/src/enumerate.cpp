#include "spex/enumerate.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "spex/canonical.hpp"
#include "spex/graph6.hpp"
#include "spex/planarity.hpp"

namespace spex {

namespace {

using small::SmallGraph;

class Enumerator {
 public:
  Enumerator(const EnumerationConfig& cfg,
             const std::function<bool(const Graph&)>& sink)
      : cfg_(cfg), sink_(sink) {
    if (cfg.pattern) pattern_graph_ = cfg.pattern->build();
  }

  long run() {
    SmallGraph root;
    root.n = 1;
    root.adj.assign(1, 0);
    Graph root_graph = small::to_graph(root);
    if (passes_filters(root_graph)) recurse(root, to_graph6(root_graph));
    return emitted_;
  }

 private:
  // Monotone filters applied to partial graphs: a nonplanar or
  // pattern-containing partial cannot extend to a planar / pattern-free
  // graph, so the whole subtree is cut.
  bool passes_filters(const Graph& g) const {
    if (cfg_.planar_only && !is_planar(g).planar) return false;
    if (pattern_graph_ && contains_subgraph(g, *pattern_graph_)) return false;
    return true;
  }

  void emit(const Graph& canon) {
    if (cfg_.connected_only && !is_connected(canon)) return;
    ++emitted_;
    if (!sink_(canon)) aborted_ = true;
    if (cfg_.limit && emitted_ >= *cfg_.limit) aborted_ = true;
  }

  void recurse(const SmallGraph& g, const std::string& canon_g6) {
    if (aborted_) return;
    if (g.n == cfg_.n) {
      emit(from_graph6(canon_g6));
      return;
    }
    int k = g.n;
    // children keyed by canonical string: dedupes extensions equivalent
    // under Aut(g) and fixes the recursion order
    std::map<std::string, std::uint64_t> children;
    for (std::uint64_t s = 0; s < (1ull << k); ++s) {
      SmallGraph h = g;
      h.n = k + 1;
      h.adj.push_back(s);
      for (int v = 0; v < k; ++v)
        if ((s >> v) & 1) h.adj[v] |= 1ull << k;
      Graph hg = small::to_graph(h);
      if (!passes_filters(hg)) continue;
      std::vector<int> perm = small::canonical_labeling(h);
      std::string canon_h =
          to_graph6(small::to_graph(small::apply_labeling(h, perm)));
      if (children.count(canon_h)) continue;
      // canonical-parent test: deleting the vertex with the highest
      // canonical label must reproduce this parent (up to isomorphism)
      int d = 0;
      for (int v = 0; v <= k; ++v)
        if (perm[v] == k) d = v;
      if (d != k) {
        SmallGraph alt = small::delete_vertex(h, d);
        std::vector<int> alt_perm = small::canonical_labeling(alt);
        std::string alt_canon =
            to_graph6(small::to_graph(small::apply_labeling(alt, alt_perm)));
        if (alt_canon != canon_g6) continue;
      }
      children.emplace(std::move(canon_h), s);
    }
    for (const auto& [canon_h, s] : children) {
      if (aborted_) return;
      SmallGraph h = g;
      h.n = k + 1;
      h.adj.push_back(s);
      for (int v = 0; v < k; ++v)
        if ((s >> v) & 1) h.adj[v] |= 1ull << k;
      recurse(h, canon_h);
    }
  }

  const EnumerationConfig& cfg_;
  const std::function<bool(const Graph&)>& sink_;
  std::optional<Graph> pattern_graph_;
  long emitted_ = 0;
  bool aborted_ = false;
};

}  // namespace

long enumerate_graphs(const EnumerationConfig& cfg,
                      const std::function<bool(const Graph&)>& sink) {
  if (cfg.n < 1) throw std::invalid_argument("enumerate_graphs: need n >= 1");
  if (cfg.limit && *cfg.limit < 1)
    throw std::invalid_argument("enumerate_graphs: limit must be >= 1");
  int cap = cfg.allow_large ? 14 : 11;
  if (cfg.n > cap)
    throw std::invalid_argument(
        "enumerate_graphs: n = " + std::to_string(cfg.n) + " exceeds the cap of " +
        std::to_string(cap) +
        (cfg.allow_large ? "" : " (set allow_large to go further)"));
  Enumerator e(cfg, sink);
  return e.run();
}

long estimated_class_count(int n) {
  // connected planar graphs per vertex count
  static const long counts[] = {0,    1,     1,      2,       6,        20,
                                99,   646,   5974,   71885,   1052805,  17449299,
                                313372298};
  if (n >= 1 && n <= 12) return counts[n];
  return -1;
}

}  // namespace spex
