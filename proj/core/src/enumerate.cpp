#include "dompack/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "dompack/isomorphism.hpp"

namespace dompack {

namespace {

Graph triangle_mask_graph(int n, std::uint64_t mask) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1u) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
  return Graph::from_rows(n, std::move(rows));
}

// Adds one vertex joined to `nb_mask` and returns the grown graph.
Graph extend(const Graph& g, std::uint64_t nb_mask) {
  int n = g.order();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n + 1), 0);
  for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = g.row(v);
  rows[static_cast<std::size_t>(n)] = nb_mask;
  std::uint64_t m = nb_mask;
  while (m != 0) {
    int v = std::countr_zero(m);
    m &= m - 1;
    rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << n;
  }
  return Graph::from_rows(n + 1, std::move(rows));
}

std::vector<std::uint64_t> iso_keys(int n) {
  std::vector<std::uint64_t> level = {canonical_key(edgeless(1))};
  for (int m = 2; m <= n; ++m) {
    std::unordered_set<std::uint64_t> next;
    for (std::uint64_t key : level) {
      Graph base = graph_from_key(key, m - 1);
      std::uint64_t top = std::uint64_t{1} << (m - 1);
      for (std::uint64_t nb = 0; nb < top; ++nb) next.insert(canonical_key(extend(base, nb)));
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
  return level;
}

}  // namespace

void enumerate_graphs(int n, bool up_to_iso, const std::function<void(const Graph&)>& yield) {
  if (up_to_iso) {
    if (n < 1 || n > 8) throw std::invalid_argument("isomorph-free enumeration supports order in [1,8]");
    for (std::uint64_t key : iso_keys(n)) yield(graph_from_key(key, n));
    return;
  }
  if (n < 1 || n > 7) throw std::invalid_argument("labelled enumeration supports order in [1,7]");
  std::uint64_t top = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < top; ++mask) yield(triangle_mask_graph(n, mask));
}

std::vector<Graph> enumerate_iso_classes(int n) {
  std::vector<Graph> out;
  enumerate_graphs(n, true, [&out](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace dompack
