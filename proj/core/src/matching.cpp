#include <queue>
#include <vector>

#include "spex/patterns.hpp"

namespace spex {

namespace {

// Edmonds' blossom algorithm, augmenting-path formulation: BFS an alternating
// tree from each exposed vertex, contracting odd cycles onto their base as
// they are discovered.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g) : g_(g), n_(g.vertex_count()) {
    match_.assign(n_, -1);
  }

  int run() {
    int size = 0;
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1 && augment_from(v)) ++size;
    return size;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  bool augment_from(int root) {
    used_.assign(n_, false);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to = g_.neighbors(v).first(); to >= 0; to = g_.neighbors(v).next(to)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          // odd cycle: contract the blossom onto its base
          int cur_base = lca(v, to);
          in_blossom_.assign(n_, false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) {
            // exposed vertex reached: flip the alternating path
            int u = to;
            while (u != -1) {
              int pv = parent_[u];
              int next = match_[pv];
              match_[u] = pv;
              match_[pv] = u;
              u = next;
            }
            return true;
          }
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

int matching_number(const Graph& g) {
  BlossomMatcher matcher(g);
  return matcher.run();
}

}  // namespace spex
