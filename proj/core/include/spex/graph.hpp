#pragma once

#include <cstdint>
#include <vector>

namespace spex {

/// Set of vertex indices over a fixed universe {0, ..., n-1}, stored as a
/// packed bitset. Doubles as the subset type S, T, R used by the edge-count
/// functionals.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return universe_; }

  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }
  void reset(int i) {
    words_[static_cast<std::size_t>(i) >> 6] &= ~(1ull << (i & 63));
  }

  int count() const;
  bool empty() const;

  /// Index of the lowest set bit, or -1 if none.
  int first() const;
  /// Index of the lowest set bit strictly above i, or -1 if none.
  int next(int i) const;

  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator|(const VertexSet& o) const;
  bool operator==(const VertexSet& o) const = default;

  bool intersects(const VertexSet& o) const;
  bool is_subset_of(const VertexSet& o) const;

  /// Calls fn(v) for every member, in increasing order.
  template <typename F>
  void for_each(F&& fn) const {
    for (int v = first(); v >= 0; v = next(v)) fn(v);
  }

  std::vector<int> to_vector() const;

  static VertexSet full(int universe);

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Finite simple undirected graph on vertices 0..n-1, adjacency stored as one
/// neighbor bitset per vertex. Symmetry and looplessness are maintained by
/// add_edge; graphs are treated as immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  long edge_count() const { return m_; }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  int max_degree() const;

  bool operator==(const Graph& o) const = default;

 private:
  int n_ = 0;
  long m_ = 0;
  std::vector<VertexSet> adj_;
};

// Elementary constructions. Vertex labels are dense 0-based integers and the
// labeling is canonical: disjoint_union and join place G before H, so the
// same call always yields the same labeled graph.
Graph empty_graph(int n);
Graph path_graph(int n);       // path(0) is the empty graph, path(1) = K_1
Graph cycle_graph(int n);      // requires n >= 3
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph disjoint_edges(int k);   // kK_2: 2k vertices, edges {2i, 2i+1}

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

Graph wheel(int k);            // K_1 + C_{k-1}; wheel(3) = K_3; requires k >= 3
Graph friendship(int k);       // K_1 + kK_2; requires k >= 1

// The three extremal families, case-defined per parameter.
Graph family_w(int n, int k);  // k >= 3, n >= k+1
Graph family_f(int n, int k);  // k >= 1, n >= 2k+1
Graph family_m(int n, int k);  // k >= 1, n >= 2k

/// e(S): number of edges of G with both endpoints in S.
long edge_count_within(const Graph& g, const VertexSet& s);
/// e(S,T): number of edges with one endpoint in S and the other in T.
/// S and T must be disjoint.
long edge_count_between(const Graph& g, const VertexSet& s, const VertexSet& t);

/// Component id per vertex, ids assigned in order of the lowest vertex of
/// each component (so vertex 0 is always in component 0).
std::vector<int> connected_components(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);
/// Two-colorability; the empty graph and K_1 count as bipartite.
bool is_bipartite(const Graph& g);

/// Relabels g by perm: vertex v becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace spex
