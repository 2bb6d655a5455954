#include "spex/graph6.hpp"

namespace spex {

Graph6ParseError::Graph6ParseError(std::size_t offset, const std::string& what)
    : std::runtime_error("graph6 parse error at byte " + std::to_string(offset) +
                         ": " + what),
      offset_(offset) {}

std::string to_graph6(const Graph& g) {
  long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else if (n <= 68719476735L) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw std::invalid_argument("to_graph6: graph too large");
  }
  int bit = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bit == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bit = 0;
        acc = 0;
      }
    }
  if (bit > 0) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
  return out;
}

Graph from_graph6(const std::string& s) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (pos + k > s.size())
      throw Graph6ParseError(s.size(), "unexpected end of input");
  };
  auto val = [&](std::size_t at) -> long {
    unsigned char c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126)
      throw Graph6ParseError(at, "byte outside graph6 range 63..126");
    return c - 63;
  };

  need(1);
  long n;
  if (s[0] != 126) {
    n = val(0);
    pos = 1;
  } else {
    need(2);
    if (s[1] != 126) {
      need(4);
      n = (val(1) << 12) | (val(2) << 6) | val(3);
      pos = 4;
      if (n < 63) throw Graph6ParseError(1, "non-minimal long-form order");
    } else {
      need(8);
      n = 0;
      for (int i = 2; i < 8; ++i) n = (n << 6) | val(i);
      pos = 8;
      if (n < 258048) throw Graph6ParseError(2, "non-minimal long-form order");
    }
  }

  long nbits = n * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (s.size() != pos + nbytes)
    throw Graph6ParseError(s.size(),
                           "expected " + std::to_string(pos + nbytes) +
                               " bytes total, got " + std::to_string(s.size()));

  Graph g(static_cast<int>(n));
  long bit_index = 0;
  long i = 0, j = 1;  // column-major upper triangle position
  for (std::size_t b = 0; b < nbytes; ++b) {
    long v = val(pos + b);
    for (int k = 5; k >= 0; --k, ++bit_index) {
      int bit = static_cast<int>((v >> k) & 1);
      if (bit_index >= nbits) {
        if (bit) throw Graph6ParseError(pos + b, "nonzero padding bits");
        continue;
      }
      if (bit) g.add_edge(static_cast<int>(i), static_cast<int>(j));
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

}  // namespace spex
