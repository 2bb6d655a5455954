#pragma once

#include <random>
#include <vector>

#include "spex/graph.hpp"

// Test-only reference implementations, independent of the production code
// paths they validate.
namespace spex::oracle {

/// Planarity by brute-force Kuratowski subdivision search: true iff the graph
/// contains no subdivision of K_5 or K_{3,3}. Exponential; for small n only.
bool planar_by_kuratowski(const Graph& g);

/// Largest adjacency eigenvalue from a dense symmetric eigensolver (n <= 64).
double rho_dense(const Graph& g);

/// Maximum matching by bitmask dynamic programming (n <= 22).
int matching_bruteforce(const Graph& g);

/// Subgraph containment by enumerating every injective map V(F) -> V(G).
bool contains_by_injection(const Graph& g, const Graph& f);

// Deterministic generators. rng() % k keeps sequences identical across
// platforms (std::uniform_int_distribution is not portable).
std::vector<int> random_permutation(std::mt19937_64& rng, int n);
Graph random_graph(std::mt19937_64& rng, int n, int edge_target);
/// Connected planar graph: random spanning tree plus planarity-preserving
/// random edges up to edge_target.
Graph random_connected_planar(std::mt19937_64& rng, int n, int edge_target);

}  // namespace spex::oracle
