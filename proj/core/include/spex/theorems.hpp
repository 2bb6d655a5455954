#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spex/graph.hpp"
#include "spex/patterns.hpp"
#include "spex/path_system.hpp"
#include "spex/spectral.hpp"

namespace spex {

enum class RClass { AllPaths, SingleCycleSpanningR, Other };
enum class RComponentKind { Path, Cycle, Other };

struct RComponent {
  RComponentKind kind = RComponentKind::Other;
  int size = 0;
};

/// The two-hub decomposition: u1 and u2 with common neighborhood R equal to
/// all remaining vertices, plus the classification of G[R].
struct StructureWitness {
  int u1 = 0;
  int u2 = 0;
  VertexSet r;
  bool hub_edge = false;
  RClass r_class = RClass::Other;
  std::vector<RComponent> components;  // ordered by lowest vertex
  /// G[R] is a disjoint union of paths, or a single spanning cycle with the
  /// hubs nonadjacent.
  bool consistent = false;
};

/// Scans vertex pairs in lexicographic order for N(u1) cap N(u2) =
/// V \ {u1,u2}; absent if no pair qualifies. Requires n >= 4.
std::optional<StructureWitness> structure_witness(const Graph& g);

struct SearchOptions {
  double tie_tolerance = 1e-9;
  int threads = 1;
  bool include_disconnected = false;
  SpectralOptions spectral;
  /// Called for every examined graph (canonical form, its rho); used by the
  /// per-graph CSV dump. Must be safe for the configured thread count.
  std::function<void(const Graph&, double)> per_graph;
};

struct SearchReport {
  int n = 0;
  std::string pattern;
  double max_rho = 0.0;
  std::vector<std::string> argmax;  // canonical graph6, sorted
  long examined = 0;
  double tie_tolerance = 0.0;
  std::optional<bool> matches_paper_family;
  // best connected result over fewer vertices (include_disconnected)
  std::optional<int> best_smaller_n;
  std::optional<double> best_smaller_rho;
  std::vector<std::string> best_smaller_argmax;
  double runtime_ms = 0.0;
};

/// Exhaustive spectral-extremal search over connected pattern-free planar
/// graphs on n vertices. argmax collects every graph within tie_tolerance of
/// the maximum. n <= 11.
SearchReport spex_search(int n, const ForbiddenPattern& pattern,
                         const SearchOptions& opts = {});

enum class TheoremId { T2, T3, T4 };

struct TheoremReport {
  TheoremId which = TheoremId::T2;
  int n = 0;
  int k = 0;
  std::string family_g6;  // as-constructed labeling
  bool planar = false;
  bool pattern_free = false;
  std::optional<int> matching;  // T4 only
  bool matching_ok = true;
  double rho = 0.0;
  std::optional<double> closed_form;
  bool closed_form_ok = true;
  bool hard_assertions_pass = false;
  bool search_ran = false;
  std::optional<bool> argmax_is_family;
  std::optional<SearchReport> search;
};

struct VerifyOptions {
  SearchOptions search;
  /// spex_search is run when n <= search_cap (exhaustive search stays cheap
  /// up to 9; 10 and 11 are possible but slow).
  int search_cap = 9;
  SpectralOptions spectral;
};

/// Builds the family graph for the theorem, checks the hard assertions
/// (planarity, pattern-freeness, exact matching number for T4, closed-form
/// rho agreement where one applies) and, for small n, reports whether the
/// family is the exhaustive-search argmax. The small-n argmax identity is
/// reported, not asserted.
TheoremReport verify_theorem(int n, int k, TheoremId which,
                             const VerifyOptions& opts = {});

std::string to_string(TheoremId id);
std::string to_string(RClass c);
std::string to_string(RComponentKind k);

}  // namespace spex
