#include "spex/path_system.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace spex {

PathSystem::PathSystem(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("PathSystem: parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int PathSystem::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string PathSystem::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts_[i]);
  }
  return s;
}

PathSystem PathSystem::parse(const std::string& s) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(s.substr(pos), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("PathSystem::parse: bad token in '" + s + "'");
    }
    parts.push_back(v);
    pos += used;
    if (pos < s.size()) {
      if (s[pos] != '+' && s[pos] != ',')
        throw std::invalid_argument("PathSystem::parse: expected '+' or ',' in '" + s + "'");
      ++pos;
    }
  }
  if (parts.empty()) throw std::invalid_argument("PathSystem::parse: empty");
  return PathSystem(parts);
}

PathSystem transform_path_system(const PathSystem& h, int s1, int s2) {
  if (s2 < 1 || s1 < s2)
    throw std::invalid_argument("transform_path_system: need s1 >= s2 >= 1");
  std::vector<int> parts = h.parts();
  auto take = [&](int value) {
    auto it = std::find(parts.begin(), parts.end(), value);
    if (it == parts.end())
      throw std::invalid_argument("transform_path_system: no component of order " +
                                  std::to_string(value));
    parts.erase(it);
  };
  take(s1);
  take(s2);  // distinct components: s1 == s2 needs two copies
  if (s2 >= 2) {
    parts.push_back(s1 + 1);
    parts.push_back(s2 - 1);
  } else {
    parts.push_back(s1 + s2);
  }
  return PathSystem(parts);
}

std::optional<std::vector<std::pair<int, int>>> transformation_path(
    const PathSystem& from, const PathSystem& to) {
  if (from.total() != to.total())
    throw std::invalid_argument("transformation_path: totals differ");
  if (from == to) return std::vector<std::pair<int, int>>{};

  std::vector<std::pair<int, int>> steps;
  std::vector<int> cur = from.parts();  // sorted descending
  auto take_largest_at_most = [&](int bound) -> std::optional<int> {
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (cur[i] <= bound) {
        int v = cur[i];
        cur.erase(cur.begin() + static_cast<long>(i));
        return v;
      }
    return std::nullopt;
  };

  for (int t : to.parts()) {  // largest target part first
    auto grown = take_largest_at_most(t);
    if (!grown) return std::nullopt;
    int p = *grown;
    while (p < t) {
      auto feed = take_largest_at_most(p);  // s2 <= s1 required
      if (!feed) return std::nullopt;
      steps.emplace_back(p, *feed);
      if (*feed >= 2) {
        ++p;
        cur.insert(std::upper_bound(cur.begin(), cur.end(), *feed - 1,
                                    std::greater<>()),
                   *feed - 1);
      } else {
        ++p;
      }
    }
  }
  return steps;
}

Graph k2_plus_paths(const PathSystem& h) {
  Graph paths(h.total());
  int base = 0;
  for (int s : h.parts()) {
    for (int i = 0; i + 1 < s; ++i) paths.add_edge(base + i, base + i + 1);
    base += s;
  }
  return join(complete_graph(2), paths);
}

Lemma9Record verify_lemma9(int n, const PathSystem& h, int s1, int s2,
                           const SpectralOptions& opts) {
  if (h.total() != n - 2)
    throw std::invalid_argument("verify_lemma9: path system must have n-2 vertices");
  PathSystem transformed = transform_path_system(h, s1, s2);
  Lemma9Record rec;
  rec.rho_before = spectral_radius(k2_plus_paths(h), opts).rho;
  rec.rho_after = spectral_radius(k2_plus_paths(transformed), opts).rho;
  rec.strict_increase = rec.rho_after > rec.rho_before;
  return rec;
}

}  // namespace spex
