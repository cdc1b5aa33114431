#include "dompack/graph6.hpp"

#include <vector>

// graph6 packs the upper triangle of the adjacency matrix in column order:
// (0,1), (0,2), (1,2), (0,3), ... Bits are taken six at a time, most
// significant first, and each group is stored as one printable byte after
// adding 63.  The first byte is the order plus 63 (single-byte form only).

namespace dompack {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph from_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("graph6: empty line");

  unsigned char first = static_cast<unsigned char>(line[0]);
  if (first < kBias || first > 126) throw Graph6Error("graph6: invalid order byte");
  if (first == 126) throw Graph6Error("graph6: multi-byte orders not supported");
  int n = first - kBias;
  if (n < 1) throw Graph6Error("graph6: order must be at least 1");

  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(line.size()) - 1 < nbytes) throw Graph6Error("graph6: line too short");
  if (static_cast<int>(line.size()) - 1 > nbytes) throw Graph6Error("graph6: trailing characters");

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  int bit = 0;
  int i = 0, j = 1;
  for (int b = 0; b < nbytes; ++b) {
    unsigned char c = static_cast<unsigned char>(line[static_cast<std::size_t>(1 + b)]);
    if (c < kBias || c > 126) throw Graph6Error("graph6: invalid data byte");
    int group = c - kBias;
    for (int k = 5; k >= 0; --k, ++bit) {
      bool set = (group >> k) & 1;
      if (bit >= nbits) {
        if (set) throw Graph6Error("graph6: nonzero padding bits");
        continue;
      }
      if (set) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_rows(n, std::move(rows));
}

std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6: order above 62 not supported");
  std::string out;
  out += static_cast<char>(n + kBias);
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(group + kBias);
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((group << (6 - filled)) + kBias);
  return out;
}

}  // namespace dompack
