#pragma once

#include <functional>
#include <optional>

#include "spex/graph.hpp"
#include "spex/patterns.hpp"

namespace spex {

struct EnumerationConfig {
  int n = 1;
  bool connected_only = true;
  bool planar_only = true;
  std::optional<ForbiddenPattern> pattern;
  std::optional<long> limit;
  bool allow_large = false;  // lifts the n <= 11 cap (up to 14)
};

/// Exhaustively generates graphs on cfg.n vertices, one canonically labeled
/// representative per isomorphism class, filtered by the config. Canonical
/// augmentation: grow by one vertex per level, accept a child only if its
/// canonical deletion reproduces the parent; planarity and pattern
/// containment prune partial graphs (both are monotone). Deterministic
/// emission order: siblings by canonical graph6 string.
///
/// The sink returns false to abort; aborting propagates cleanly. Returns the
/// number of graphs emitted.
long enumerate_graphs(const EnumerationConfig& cfg,
                      const std::function<bool(const Graph&)>& sink);

/// Known isomorphism-class counts used to warn before very large runs
/// (connected planar graphs per vertex count, n = 1..12).
long estimated_class_count(int n);

}  // namespace spex
