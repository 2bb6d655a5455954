#include "spex/planarity.hpp"

#include <algorithm>
#include <vector>

namespace spex {

EulerVerdict euler_filter(const Graph& g) {
  long n = g.vertex_count();
  long e = g.edge_count();
  if (n >= 3) {
    if (e > 3 * n - 6) return EulerVerdict::DefinitelyNonplanar;
    if (e > 2 * n - 4 && is_bipartite(g)) return EulerVerdict::DefinitelyNonplanar;
  }
  return EulerVerdict::MaybePlanar;
}

namespace {

// Left-right planarity criterion (Brandes' formulation of de Fraysseix /
// Rosenstiehl). Phase one orients the graph by DFS and computes lowpoints
// and nesting order; phase two re-traverses in nesting order maintaining a
// stack of conflict pairs of return-edge intervals. The graph is planar iff
// no two return edges on the same side are forced to interleave.
class LeftRightTest {
 public:
  explicit LeftRightTest(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  bool run() {
    height_.assign(n_, kNone);
    parent_edge_.assign(n_, kNone);
    // one record per oriented edge, created as DFS1 first traverses it
    src_.clear();
    dst_.clear();
    lowpt_.clear();
    lowpt2_.clear();
    nesting_.clear();
    oriented_.assign(n_, VertexSet(n_));

    for (int root = 0; root < n_; ++root) {
      if (height_[root] != kNone) continue;
      height_[root] = 0;
      dfs_orient(root);
    }

    int m = static_cast<int>(src_.size());
    ref_.assign(m, kNone);
    lowpt_edge_.assign(m, kNone);
    stack_bottom_.assign(m, 0);

    // outgoing edges sorted by nesting depth
    ordered_out_.assign(n_, {});
    for (int e = 0; e < m; ++e) ordered_out_[src_[e]].push_back(e);
    for (int v = 0; v < n_; ++v)
      std::sort(ordered_out_[v].begin(), ordered_out_[v].end(), [&](int a, int b) {
        if (nesting_[a] != nesting_[b]) return nesting_[a] < nesting_[b];
        return dst_[a] < dst_[b];
      });

    stack_.clear();
    for (int root = 0; root < n_; ++root)
      if (parent_edge_[root] == kNone && !ordered_out_[root].empty())
        if (!dfs_test(root)) return false;
    return true;
  }

 private:
  static constexpr int kNone = -1;

  struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };
  struct ConflictPair {
    Interval left, right;
  };

  void dfs_orient(int v) {
    int e = parent_edge_[v];
    g_.neighbors(v).for_each([&](int w) {
      if (oriented_[v].test(w) || oriented_[w].test(v)) return;
      oriented_[v].set(w);
      int ei = static_cast<int>(src_.size());
      src_.push_back(v);
      dst_.push_back(w);
      lowpt_.push_back(height_[v]);
      lowpt2_.push_back(height_[v]);
      nesting_.push_back(0);
      if (height_[w] == kNone) {  // tree edge
        parent_edge_[w] = ei;
        height_[w] = height_[v] + 1;
        dfs_orient(w);
      } else {  // back edge
        lowpt_[ei] = height_[w];
      }
      nesting_[ei] = 2 * lowpt_[ei] + (lowpt2_[ei] < height_[v] ? 1 : 0);
      if (e != kNone) {
        if (lowpt_[ei] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[ei]);
          lowpt_[e] = lowpt_[ei];
        } else if (lowpt_[ei] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[ei]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[ei]);
        }
      }
    });
  }

  bool interval_conflicting(const Interval& i, int b) const {
    return i.high != kNone && lowpt_[i.high] > lowpt_[b];
  }

  int pair_lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  bool dfs_test(int v) {
    int e = parent_edge_[v];
    for (int ei : ordered_out_[v]) {
      int w = dst_[ei];
      stack_bottom_[ei] = static_cast<int>(stack_.size());
      if (ei == parent_edge_[w]) {  // tree edge
        if (!dfs_test(w)) return false;
      } else {  // back edge
        lowpt_edge_[ei] = ei;
        ConflictPair p;
        p.right = {ei, ei};
        stack_.push_back(p);
      }
      if (lowpt_[ei] < height_[v]) {  // ei has a return edge
        if (ei == ordered_out_[v].front()) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    // merge return edges of ei into p.right
    while (true) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) std::swap(q.left, q.right);
      if (!q.left.empty()) return false;  // interleaving on both sides
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty())
          p.right.high = q.right.high;
        else
          ref_[p.right.low] = q.right.high;
        p.right.low = q.right.low;
      } else {  // align
        ref_[q.right.low] = lowpt_edge_[e];
      }
      if (static_cast<int>(stack_.size()) == stack_bottom_[ei]) break;
    }
    // merge return edges of earlier siblings conflicting with ei into p.left
    while (!stack_.empty() && (interval_conflicting(stack_.back().left, ei) ||
                               interval_conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (interval_conflicting(q.right, ei)) std::swap(q.left, q.right);
      if (interval_conflicting(q.right, ei)) return false;
      // interval below lowpt(ei) is still relevant on the right side
      if (p.right.low != kNone) ref_[p.right.low] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty())
        p.left.high = q.left.high;
      else
        ref_[p.left.low] = q.left.high;
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    int u = src_[e];
    // drop conflict pairs whose return edges all end at u
    while (!stack_.empty() && pair_lowest(stack_.back()) == height_[u])
      stack_.pop_back();
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && dst_[p.left.high] == u)
        p.left.high = ref_[p.left.high];
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[p.left.low] = p.right.low;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && dst_[p.right.high] == u)
        p.right.high = ref_[p.right.high];
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[p.right.low] = p.left.low;
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    // the reference edge of e is a highest remaining return edge
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      int hl = stack_.back().left.high;
      int hr = stack_.back().right.high;
      if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr]))
        ref_[e] = hl;
      else
        ref_[e] = hr;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> height_, parent_edge_;
  std::vector<VertexSet> oriented_;
  std::vector<int> src_, dst_, lowpt_, lowpt2_, nesting_;
  std::vector<int> ref_, lowpt_edge_, stack_bottom_;
  std::vector<std::vector<int>> ordered_out_;
  std::vector<ConflictPair> stack_;
};

}  // namespace

PlanarityVerdict is_planar(const Graph& g) {
  long n = g.vertex_count();
  long e = g.edge_count();
  if (n >= 3 && e > 3 * n - 6)
    return {false, PlanarityFilter::EulerBound};
  if (n >= 3 && e > 2 * n - 4 && is_bipartite(g))
    return {false, PlanarityFilter::BipartiteEulerBound};
  if (n < 5 || e < 9)  // too small for K_5 or K_{3,3}
    return {true, PlanarityFilter::FullTest};
  LeftRightTest test(g);
  return {test.run(), PlanarityFilter::FullTest};
}

}  // namespace spex
