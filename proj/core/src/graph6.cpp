#include "spexlab/graph6.hpp"

namespace spexlab {

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    // 126 prefix, then n in three big-endian sextets
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph from_graph6(const std::string& s) {
  size_t pos = 0;
  auto next = [&]() -> int {
    check(pos < s.size(), errc::parse_error, "graph6 string truncated");
    int c = static_cast<unsigned char>(s[pos++]);
    check(c >= 63 && c <= 126, errc::parse_error, "graph6 byte out of range");
    return c;
  };
  int c0 = next();
  long n;
  if (c0 == 126) {
    check(s.size() >= 4 && s[1] != 126, errc::parse_error, "unsupported graph6 size form");
    long a = next() - 63, b = next() - 63, c = next() - 63;
    n = (a << 12) | (b << 6) | c;
  } else {
    n = c0 - 63;
  }
  check(n <= Graph::kMaxVertices, errc::capacity_exceeded, "graph6 order exceeds 64");
  Graph g(static_cast<int>(n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        acc = next() - 63;
        nbits = 6;
      }
      if (acc & (1 << (nbits - 1))) g.add_edge(i, j);
      --nbits;
    }
  }
  check(pos == s.size(), errc::parse_error, "trailing bytes in graph6 string");
  return g;
}

}  // namespace spexlab
