#pragma once

#include <optional>
#include <string>

#include "spex/graph.hpp"

namespace spex {

/// Forbidden-subgraph specification: an arbitrary graph, or one of the named
/// parametric patterns. Matching(m) means mK_2 (m independent edges).
class ForbiddenPattern {
 public:
  enum class Kind { Generic, Wheel, Friendship, Matching };

  static ForbiddenPattern generic(Graph f);
  static ForbiddenPattern wheel_k(int k);       // k >= 3
  static ForbiddenPattern friendship_k(int k);  // k >= 1
  static ForbiddenPattern matching_m(int m);    // m >= 1

  /// Grammar: "wheel:k" | "friendship:k" | "matching:m" | "g6:<graph6>".
  static ForbiddenPattern parse(const std::string& spec);

  Kind kind() const { return kind_; }
  int parameter() const { return k_; }
  /// The pattern as a concrete graph (builds wheel/friendship/matching on
  /// demand; returns the stored graph for Generic).
  Graph build() const;
  std::string to_string() const;

 private:
  ForbiddenPattern(Kind kind, int k, Graph f) : kind_(kind), k_(k), f_(std::move(f)) {}
  Kind kind_;
  int k_;
  Graph f_;  // only for Generic
};

/// True iff G has a subgraph isomorphic to F (not necessarily induced):
/// an injective map V(F) -> V(G) carrying edges to edges. Backtracking with
/// degree pruning; pattern vertices are matched high-degree and
/// already-connected first.
bool contains_subgraph(const Graph& g, const Graph& f);

/// Maximum matching size via augmenting paths with blossom contraction.
int matching_number(const Graph& g);

/// Matching(m) dispatches to matching_number(G) < m; Wheel/Friendship build
/// the pattern and dispatch to contains_subgraph, with a degree
/// short-circuit for wheels of k >= 4.
bool is_pattern_free(const Graph& g, const ForbiddenPattern& p);

/// True iff F is a subgraph of K_{2,|V(F)|} (equivalently, of K_{2,m} for all
/// m >= |V(F)|). F must be nonempty.
bool fits_in_k2m(const Graph& f);

}  // namespace spex
