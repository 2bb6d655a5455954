#pragma once

#include <cstdint>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

namespace small {

/// Mask-based graph for the canonicalizer and enumerator hot paths, n <= 64.
struct SmallGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  void add_edge(int u, int v) {
    adj[u] |= 1ull << v;
    adj[v] |= 1ull << u;
  }
};

SmallGraph from_graph(const Graph& g);
Graph to_graph(const SmallGraph& g);
SmallGraph apply_labeling(const SmallGraph& g, const std::vector<int>& perm);
SmallGraph delete_vertex(const SmallGraph& g, int v);

/// Canonical labeling (vertex -> new label): the same labeling results for
/// every relabeling of the input. Iterative neighborhood refinement with
/// backtracking over the first non-singleton cell, pruned by automorphisms
/// discovered along the way.
std::vector<int> canonical_labeling(const SmallGraph& g);

}  // namespace small

/// Canonically labeled copy of g; canonical_form(G) == canonical_form(pi(G))
/// for every permutation pi. Supports n <= 64.
Graph canonical_form(const Graph& g);

}  // namespace spex
