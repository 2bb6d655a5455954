#include "spex/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace spex {
namespace small {

SmallGraph from_graph(const Graph& g) {
  if (g.vertex_count() > 64)
    throw std::invalid_argument("SmallGraph: supports at most 64 vertices");
  SmallGraph s;
  s.n = g.vertex_count();
  s.adj.assign(s.n, 0);
  for (int v = 0; v < s.n; ++v)
    g.neighbors(v).for_each([&](int w) { s.adj[v] |= 1ull << w; });
  return s;
}

Graph to_graph(const SmallGraph& s) {
  Graph g(s.n);
  for (int v = 0; v < s.n; ++v) {
    // each edge once: neighbors strictly above v
    std::uint64_t hi = v + 1 < 64 ? s.adj[v] >> (v + 1) : 0;
    while (hi) {
      int w = v + 1 + std::countr_zero(hi);
      g.add_edge(v, w);
      hi &= hi - 1;
    }
  }
  return g;
}

SmallGraph apply_labeling(const SmallGraph& g, const std::vector<int>& perm) {
  SmallGraph r;
  r.n = g.n;
  r.adj.assign(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    std::uint64_t m = g.adj[v];
    while (m) {
      int w = std::countr_zero(m);
      m &= m - 1;
      r.adj[perm[v]] |= 1ull << perm[w];
    }
  }
  return r;
}

SmallGraph delete_vertex(const SmallGraph& g, int v) {
  SmallGraph r;
  r.n = g.n - 1;
  r.adj.assign(r.n, 0);
  std::uint64_t low = (1ull << v) - 1;
  for (int u = 0; u < g.n; ++u) {
    if (u == v) continue;
    std::uint64_t m = g.adj[u];
    r.adj[u < v ? u : u - 1] = (m & low) | ((m >> 1) & ~low);
  }
  return r;
}

namespace {

using Mask = std::uint64_t;

class Canonicalizer {
 public:
  explicit Canonicalizer(const SmallGraph& g) : g_(g), n_(g.n) {}

  std::vector<int> run() {
    if (n_ == 0) return {};
    std::vector<Mask> cells{n_ == 64 ? ~0ull : (1ull << n_) - 1};
    refine(cells);
    std::vector<int> prefix;
    search(cells, prefix);
    return best_perm_;
  }

 private:
  // Equitable refinement: split every cell by the vector of neighbor counts
  // into the current cells, ordering the fragments by that vector. The cell
  // order is an isomorphism invariant.
  void refine(std::vector<Mask>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Mask> out;
      out.reserve(cells.size());
      for (Mask cell : cells) {
        if (std::popcount(cell) == 1) {
          out.push_back(cell);
          continue;
        }
        struct Member {
          int v;
          std::vector<int> sig;
        };
        std::vector<Member> members;
        Mask m = cell;
        while (m) {
          int v = std::countr_zero(m);
          m &= m - 1;
          Member mem;
          mem.v = v;
          mem.sig.reserve(cells.size());
          for (Mask other : cells)
            mem.sig.push_back(std::popcount(g_.adj[v] & other));
          members.push_back(std::move(mem));
        }
        std::sort(members.begin(), members.end(),
                  [](const Member& a, const Member& b) { return a.sig < b.sig; });
        std::size_t i = 0;
        std::size_t groups = 0;
        while (i < members.size()) {
          std::size_t j = i;
          Mask frag = 0;
          while (j < members.size() && members[j].sig == members[i].sig) {
            frag |= 1ull << members[j].v;
            ++j;
          }
          out.push_back(frag);
          ++groups;
          i = j;
        }
        if (groups > 1) changed = true;
      }
      cells = std::move(out);
    }
  }

  void search(const std::vector<Mask>& cells, std::vector<int>& prefix) {
    int branch = -1;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (std::popcount(cells[i]) >= 2) {
        branch = static_cast<int>(i);
        break;
      }
    if (branch < 0) {
      process_leaf(cells);
      return;
    }

    std::vector<int> tried;
    Mask cell = cells[branch];
    Mask m = cell;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (pruned_by_orbit(v, tried, prefix)) continue;
      tried.push_back(v);
      std::vector<Mask> child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (static_cast<int>(i) == branch) {
          child.push_back(1ull << v);
          child.push_back(cell & ~(1ull << v));
        } else {
          child.push_back(cells[i]);
        }
      }
      refine(child);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
    }
  }

  // Orbit pruning: skip v if an automorphism group generated by leaves found
  // so far, restricted to generators fixing the individualized prefix, puts v
  // in the orbit of an already-tried vertex. Such generators demonstrably fix
  // the prefix, so equal subtrees would result.
  bool pruned_by_orbit(int v, const std::vector<int>& tried,
                       const std::vector<int>& prefix) const {
    if (tried.empty() || autos_.empty()) return false;
    std::vector<int> uf(n_);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (const auto& a : autos_) {
      bool fixes = true;
      for (int p : prefix)
        if (a[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) {
        int ra = find(x), rb = find(a[x]);
        if (ra != rb) uf[ra] = rb;
      }
    }
    int rv = find(v);
    for (int u : tried)
      if (find(u) == rv) return true;
    return false;
  }

  void process_leaf(const std::vector<Mask>& cells) {
    std::vector<int> perm(n_);
    for (std::size_t i = 0; i < cells.size(); ++i)
      perm[std::countr_zero(cells[i])] = static_cast<int>(i);
    std::vector<Mask> rows(n_, 0);
    for (int v = 0; v < n_; ++v) {
      Mask m = g_.adj[v];
      while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        rows[perm[v]] |= 1ull << perm[w];
      }
    }
    if (best_perm_.empty() || rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_perm_ = std::move(perm);
      best_inverse_.assign(n_, 0);
      for (int v = 0; v < n_; ++v) best_inverse_[best_perm_[v]] = v;
    } else if (rows == best_rows_ && autos_.size() < 256) {
      std::vector<int> sigma(n_);
      for (int v = 0; v < n_; ++v) sigma[v] = best_inverse_[perm[v]];
      bool identity = true;
      for (int v = 0; v < n_; ++v)
        if (sigma[v] != v) {
          identity = false;
          break;
        }
      if (!identity) autos_.push_back(std::move(sigma));
    }
  }

  const SmallGraph& g_;
  int n_;
  std::vector<Mask> best_rows_;
  std::vector<int> best_perm_, best_inverse_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace

std::vector<int> canonical_labeling(const SmallGraph& g) {
  Canonicalizer c(g);
  return c.run();
}

}  // namespace small

Graph canonical_form(const Graph& g) {
  small::SmallGraph s = small::from_graph(g);
  std::vector<int> perm = small::canonical_labeling(s);
  return small::to_graph(small::apply_labeling(s, perm));
}

}  // namespace spex
