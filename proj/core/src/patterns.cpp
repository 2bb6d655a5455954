#include "spex/patterns.hpp"

#include <algorithm>
#include <stdexcept>

#include "spex/graph6.hpp"

namespace spex {

ForbiddenPattern ForbiddenPattern::generic(Graph f) {
  if (f.vertex_count() == 0)
    throw std::invalid_argument("ForbiddenPattern: generic pattern must be nonempty");
  return ForbiddenPattern(Kind::Generic, 0, std::move(f));
}

ForbiddenPattern ForbiddenPattern::wheel_k(int k) {
  if (k < 3) throw std::invalid_argument("ForbiddenPattern: wheel needs k >= 3");
  return ForbiddenPattern(Kind::Wheel, k, Graph());
}

ForbiddenPattern ForbiddenPattern::friendship_k(int k) {
  if (k < 1) throw std::invalid_argument("ForbiddenPattern: friendship needs k >= 1");
  return ForbiddenPattern(Kind::Friendship, k, Graph());
}

ForbiddenPattern ForbiddenPattern::matching_m(int m) {
  if (m < 1) throw std::invalid_argument("ForbiddenPattern: matching needs m >= 1");
  return ForbiddenPattern(Kind::Matching, m, Graph());
}

ForbiddenPattern ForbiddenPattern::parse(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("bad pattern '" + spec +
                                "': expected wheel:k, friendship:k, matching:m or g6:<string>");
  std::string head = spec.substr(0, colon);
  std::string tail = spec.substr(colon + 1);
  if (head == "g6") return generic(from_graph6(tail));
  int k = 0;
  try {
    std::size_t used = 0;
    k = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad pattern parameter '" + tail + "' in '" + spec + "'");
  }
  if (head == "wheel") return wheel_k(k);
  if (head == "friendship") return friendship_k(k);
  if (head == "matching") return matching_m(k);
  throw std::invalid_argument("unknown pattern kind '" + head + "' in '" + spec + "'");
}

Graph ForbiddenPattern::build() const {
  switch (kind_) {
    case Kind::Generic: return f_;
    case Kind::Wheel: return wheel(k_);
    case Kind::Friendship: return friendship(k_);
    case Kind::Matching: return disjoint_edges(k_);
  }
  throw std::logic_error("ForbiddenPattern: bad kind");
}

std::string ForbiddenPattern::to_string() const {
  switch (kind_) {
    case Kind::Generic: return "g6:" + to_graph6(f_);
    case Kind::Wheel: return "wheel:" + std::to_string(k_);
    case Kind::Friendship: return "friendship:" + std::to_string(k_);
    case Kind::Matching: return "matching:" + std::to_string(k_);
  }
  throw std::logic_error("ForbiddenPattern: bad kind");
}

namespace {

// Static matching order for the pattern: repeatedly pick the unplaced vertex
// with the most already-placed neighbors, breaking ties by higher degree then
// lower index. High-degree hubs come first and prune fastest.
std::vector<int> pattern_order(const Graph& f) {
  int pn = f.vertex_count();
  std::vector<int> order;
  std::vector<bool> placed(pn, false);
  for (int step = 0; step < pn; ++step) {
    int best = -1, best_conn = -1, best_deg = -1;
    for (int v = 0; v < pn; ++v) {
      if (placed[v]) continue;
      int conn = 0;
      f.neighbors(v).for_each([&](int w) { conn += placed[w] ? 1 : 0; });
      if (conn > best_conn || (conn == best_conn && f.degree(v) > best_deg)) {
        best = v;
        best_conn = conn;
        best_deg = f.degree(v);
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

struct SubgraphSearch {
  const Graph& g;
  const Graph& f;
  std::vector<int> order;
  std::vector<int> image;      // pattern vertex -> host vertex or -1
  VertexSet used;

  SubgraphSearch(const Graph& host, const Graph& pat)
      : g(host), f(pat), order(pattern_order(pat)),
        image(pat.vertex_count(), -1), used(host.vertex_count()) {}

  bool extend(int depth) {
    if (depth == f.vertex_count()) return true;
    int p = order[depth];
    // candidates must dominate p's degree and be adjacent to the images of
    // all already-placed pattern neighbors
    std::optional<VertexSet> cand;
    f.neighbors(p).for_each([&](int q) {
      if (image[q] < 0) return;
      const VertexSet& nb = g.neighbors(image[q]);
      cand = cand ? (*cand & nb) : nb;
    });
    int pdeg = f.degree(p);
    auto try_host = [&](int h) {
      if (used.test(h) || g.degree(h) < pdeg) return false;
      image[p] = h;
      used.set(h);
      if (extend(depth + 1)) return true;
      used.reset(h);
      image[p] = -1;
      return false;
    };
    if (cand) {
      for (int h = cand->first(); h >= 0; h = cand->next(h))
        if (try_host(h)) return true;
    } else {
      for (int h = 0; h < g.vertex_count(); ++h)
        if (try_host(h)) return true;
    }
    return false;
  }
};

}  // namespace

bool contains_subgraph(const Graph& g, const Graph& f) {
  if (f.vertex_count() == 0) return true;
  if (f.vertex_count() > g.vertex_count() || f.edge_count() > g.edge_count())
    return false;
  if (f.max_degree() > g.max_degree()) return false;
  SubgraphSearch search(g, f);
  return search.extend(0);
}

bool fits_in_k2m(const Graph& f) {
  if (f.vertex_count() == 0)
    throw std::invalid_argument("fits_in_k2m: pattern must be nonempty");
  return contains_subgraph(complete_bipartite(2, f.vertex_count()), f);
}

bool is_pattern_free(const Graph& g, const ForbiddenPattern& p) {
  switch (p.kind()) {
    case ForbiddenPattern::Kind::Matching:
      return matching_number(g) < p.parameter();
    case ForbiddenPattern::Kind::Wheel:
      if (p.parameter() >= 4 && g.max_degree() < p.parameter() - 1) return true;
      return !contains_subgraph(g, p.build());
    case ForbiddenPattern::Kind::Friendship:
    case ForbiddenPattern::Kind::Generic:
      return !contains_subgraph(g, p.build());
  }
  throw std::logic_error("is_pattern_free: bad kind");
}

}  // namespace spex
