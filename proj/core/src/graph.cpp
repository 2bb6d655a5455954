#include "spex/graph.hpp"

#include <bit>
#include <stdexcept>

namespace spex {

int VertexSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

int VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
  return -1;
}

int VertexSet::next(int i) const {
  ++i;
  if (i >= universe_) return -1;
  std::size_t w = static_cast<std::size_t>(i) >> 6;
  std::uint64_t cur = words_[w] & (~0ull << (i & 63));
  while (true) {
    if (cur) return static_cast<int>(w * 64 + std::countr_zero(cur));
    if (++w >= words_.size()) return -1;
    cur = words_[w];
  }
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  VertexSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
  return r;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  VertexSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
  return r;
}

bool VertexSet::intersects(const VertexSet& o) const {
  std::size_t k = std::min(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < k; ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~(i < o.words_.size() ? o.words_[i] : 0)) return false;
  return true;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> v;
  for_each([&](int i) { v.push_back(i); });
  return v;
}

VertexSet VertexSet::full(int universe) {
  VertexSet r(universe);
  for (int i = 0; i < universe; ++i) r.set(i);
  return r;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.assign(n, VertexSet(n));
}

bool Graph::has_edge(int u, int v) const {
  return u >= 0 && u < n_ && v >= 0 && v < n_ && u != v && adj_[u].test(v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::out_of_range("Graph::add_edge: vertex index out of range");
  if (u == v) throw std::invalid_argument("Graph::add_edge: loops not allowed");
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++m_;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph disjoint_edges(int k) {
  if (k < 0) throw std::invalid_argument("disjoint_edges: negative k");
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph r(g.vertex_count() + h.vertex_count());
  int off = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v)
    g.neighbors(v).for_each([&](int w) {
      if (w > v) r.add_edge(v, w);
    });
  for (int v = 0; v < h.vertex_count(); ++v)
    h.neighbors(v).for_each([&](int w) {
      if (w > v) r.add_edge(off + v, off + w);
    });
  return r;
}

Graph join(const Graph& g, const Graph& h) {
  Graph r = disjoint_union(g, h);
  int off = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w = 0; w < h.vertex_count(); ++w) r.add_edge(v, off + w);
  return r;
}

long edge_count_within(const Graph& g, const VertexSet& s) {
  long c = 0;
  s.for_each([&](int v) { c += (g.neighbors(v) & s).count(); });
  return c / 2;
}

long edge_count_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
  if (s.intersects(t))
    throw std::invalid_argument("edge_count_between: S and T must be disjoint");
  long c = 0;
  s.for_each([&](int v) { c += (g.neighbors(v) & t).count(); });
  return c;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int next_id = 0;
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    comp[root] = next_id;
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      g.neighbors(v).for_each([&](int w) {
        if (comp[w] < 0) {
          comp[w] = next_id;
          stack.push_back(w);
        }
      });
    }
    ++next_id;
  }
  if (count) *count = next_id;
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  int c = 0;
  connected_components(g, &c);
  return c == 1;
}

bool is_bipartite(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      bool ok = true;
      g.neighbors(v).for_each([&](int w) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph r(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    g.neighbors(v).for_each([&](int w) {
      if (w > v) r.add_edge(perm[v], perm[w]);
    });
  return r;
}

}  // namespace spex
