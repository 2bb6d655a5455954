#include <stdexcept>

#include "spex/graph.hpp"

namespace spex {

namespace {

// Disjoint union of paths with the given orders, laid out consecutively.
Graph union_of_paths(const std::vector<int>& orders) {
  int total = 0;
  for (int s : orders) total += s;
  Graph g(total);
  int base = 0;
  for (int s : orders) {
    for (int i = 0; i + 1 < s; ++i) g.add_edge(base + i, base + i + 1);
    base += s;
  }
  return g;
}

}  // namespace

Graph wheel(int k) {
  if (k < 3) throw std::invalid_argument("wheel: need k >= 3");
  if (k == 3) return complete_graph(3);  // degenerate C_2 case
  return join(empty_graph(1), cycle_graph(k - 1));
}

Graph friendship(int k) {
  if (k < 1) throw std::invalid_argument("friendship: need k >= 1");
  return join(empty_graph(1), disjoint_edges(k));
}

Graph family_w(int n, int k) {
  if (k < 3) throw std::invalid_argument("family_w: need k >= 3");
  if (n < k + 1) throw std::invalid_argument("family_w: need n >= k+1");
  if (k == 3) return complete_bipartite(2, n - 2);
  if (k == 4) return join(empty_graph(2), cycle_graph(n - 2));
  int piece = k - 3;
  int copies = (n - 2) / piece;
  int rest = (n - 2) - piece * copies;
  std::vector<int> orders(copies, piece);
  if (rest > 0) orders.push_back(rest);
  return join(complete_graph(2), union_of_paths(orders));
}

Graph family_f(int n, int k) {
  if (k < 1) throw std::invalid_argument("family_f: need k >= 1");
  if (n < 2 * k + 1) throw std::invalid_argument("family_f: need n >= 2k+1");
  if (k == 1) return complete_bipartite(2, n - 2);
  if (k == 2) return join(complete_graph(2), empty_graph(n - 2));
  std::vector<int> orders{2 * k - 3};
  orders.insert(orders.end(), n - 2 * k + 1, 1);
  return join(complete_graph(2), union_of_paths(orders));
}

Graph family_m(int n, int k) {
  if (k < 1) throw std::invalid_argument("family_m: need k >= 1");
  if (n < 2 * k) throw std::invalid_argument("family_m: need n >= 2k");
  if (k == 1) return join(empty_graph(1), empty_graph(n - 1));  // star
  if (k == 2) return join(complete_graph(2), empty_graph(n - 2));
  std::vector<int> orders{2 * k - 3};
  orders.insert(orders.end(), n - 2 * k + 1, 1);
  return join(complete_graph(2), union_of_paths(orders));
}

}  // namespace spex
