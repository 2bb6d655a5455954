#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spex/graph.hpp"
#include "spex/spectral.hpp"

namespace spex {

/// Disjoint union of paths given by their orders (isolated vertices count as
/// order-1 paths). Stored sorted descending; equality is multiset equality.
class PathSystem {
 public:
  PathSystem() = default;
  explicit PathSystem(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  bool operator==(const PathSystem& o) const = default;

  std::string to_string() const;  // e.g. "3+2+1"
  static PathSystem parse(const std::string& s);

 private:
  std::vector<int> parts_;
};

/// The (s1,s2)-transformation: replaces components P_{s1}, P_{s2} (s1 >= s2)
/// by P_{s1+1} and P_{s2-1} when s2 >= 2, or by P_{s1+s2} when s2 = 1.
/// Requires both orders present as distinct components; preserves the total.
PathSystem transform_path_system(const PathSystem& h, int s1, int s2);

/// A sequence of valid transformations carrying `from` to `to`, found by
/// greedily growing the largest target part; nullopt when the greedy strategy
/// stalls. Totals must agree.
std::optional<std::vector<std::pair<int, int>>> transformation_path(
    const PathSystem& from, const PathSystem& to);

/// K_2 joined with the path system (parts laid out in sorted order).
Graph k2_plus_paths(const PathSystem& h);

struct Lemma9Record {
  double rho_before = 0.0;
  double rho_after = 0.0;
  bool strict_increase = false;
};

/// Builds K_2+H and K_2+H*, computes both spectral radii and reports the
/// comparison. Requires total(H) = n - 2. Reports, does not assert.
Lemma9Record verify_lemma9(int n, const PathSystem& h, int s1, int s2,
                           const SpectralOptions& opts = {1e-12, 1000000});

}  // namespace spex
