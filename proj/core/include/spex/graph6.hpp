#pragma once

#include <stdexcept>
#include <string>

#include "spex/graph.hpp"

namespace spex {

/// Malformed graph6 input. `offset` is the byte position of the offending
/// character (or of the truncation point).
class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Standard header-free graph6: short order field for n <= 62, the long forms
/// beyond; upper-triangle adjacency bits column-major, six bits per byte,
/// each byte offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

}  // namespace spex
