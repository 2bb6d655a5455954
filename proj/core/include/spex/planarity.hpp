#pragma once

#include "spex/graph.hpp"

namespace spex {

enum class EulerVerdict { MaybePlanar, DefinitelyNonplanar };

enum class PlanarityFilter { EulerBound, BipartiteEulerBound, FullTest };

struct PlanarityVerdict {
  bool planar = false;
  PlanarityFilter filter_used = PlanarityFilter::FullTest;
};

/// Cheap necessary conditions: e > 3n-6 (n >= 3), or bipartite and e > 2n-4.
EulerVerdict euler_filter(const Graph& g);

/// Full planarity decision: edge-count prefilters, then the left-right
/// (edge-orientation) criterion per connected component. No embedding is
/// produced.
PlanarityVerdict is_planar(const Graph& g);

}  // namespace spex
