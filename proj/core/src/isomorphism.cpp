#include "dompack/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

namespace dompack {

namespace {

// Triangle bit t (column order: (0,1),(0,2),(1,2),(0,3),...) lives at key
// bit 63 - t, so lexicographically larger bit strings compare larger as
// integers.  The triangle never reaches below bit 9 (55 bits at order 11),
// so the low bits carry the order and keys of different orders never
// collide.
constexpr int triangle_index(int i, int j) { return j * (j - 1) / 2 + i; }

constexpr std::uint64_t key_bit(int t) { return std::uint64_t{1} << (63 - t); }

// key bits covering all pairs among the first p vertices
std::uint64_t prefix_mask(int p) {
  int bits = p * (p - 1) / 2;
  if (bits == 0) return 0;
  return ~std::uint64_t{0} << (64 - bits);
}

struct CanonState {
  const Graph* g;
  int n;
  std::array<int, 11> perm;   // perm[pos] = original vertex placed at pos
  std::uint64_t used = 0;
  std::uint64_t best = 0;
  std::array<int, 11> order;  // candidate vertices, high degree first
};

void canon_dfs(CanonState& st, int pos, std::uint64_t bits) {
  if (pos == st.n) {
    if (bits > st.best) st.best = bits;
    return;
  }
  std::uint64_t pmask = prefix_mask(pos + 1);
  for (int idx = 0; idx < st.n; ++idx) {
    int v = st.order[static_cast<std::size_t>(idx)];
    if ((st.used >> v) & 1u) continue;
    std::uint64_t next = bits;
    for (int i = 0; i < pos; ++i)
      if (st.g->has_edge(st.perm[static_cast<std::size_t>(i)], v))
        next |= key_bit(triangle_index(i, pos));
    if ((next & pmask) < (st.best & pmask)) continue;
    st.perm[static_cast<std::size_t>(pos)] = v;
    st.used |= std::uint64_t{1} << v;
    canon_dfs(st, pos + 1, next);
    st.used &= ~(std::uint64_t{1} << v);
  }
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
  int n = g.order();
  if (n > 11) throw std::invalid_argument("canonical_key supports order <= 11");
  CanonState st;
  st.g = &g;
  st.n = n;
  for (int v = 0; v < n; ++v) st.order[static_cast<std::size_t>(v)] = v;
  std::sort(st.order.begin(), st.order.begin() + n, [&g](int a, int b) {
    int da = g.degree(a), db = g.degree(b);
    return da != db ? da > db : a < b;
  });

  // Greedy first leaf seeds the bound so pruning bites early.
  std::uint64_t seed = 0;
  for (int pos = 0; pos < n; ++pos)
    for (int i = 0; i < pos; ++i)
      if (g.has_edge(st.order[static_cast<std::size_t>(i)], st.order[static_cast<std::size_t>(pos)]))
        seed |= key_bit(triangle_index(i, pos));
  st.best = seed;

  canon_dfs(st, 0, 0);
  return st.best | static_cast<std::uint64_t>(n);
}

Graph graph_from_key(std::uint64_t key, int n) {
  if (n < 1 || n > 11) throw std::invalid_argument("graph_from_key supports order in [1,11]");
  int nbits = n * (n - 1) / 2;
  std::uint64_t triangle_mask = nbits == 0 ? 0 : ~std::uint64_t{0} << (64 - nbits);
  if ((key & ~triangle_mask) != static_cast<std::uint64_t>(n))
    throw std::invalid_argument("graph_from_key: key does not carry the expected order");
  key &= triangle_mask;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (key & key_bit(triangle_index(i, j))) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
  return Graph::from_rows(n, std::move(rows));
}

namespace {

bool iso_dfs(const Graph& g, const Graph& h, std::vector<int>& map, std::uint64_t used, int pos) {
  int n = g.order();
  if (pos == n) return true;
  for (int w = 0; w < n; ++w) {
    if ((used >> w) & 1u) continue;
    if (g.degree(pos) != h.degree(w)) continue;
    bool ok = true;
    for (int p = 0; p < pos; ++p)
      if (g.has_edge(p, pos) != h.has_edge(map[static_cast<std::size_t>(p)], w)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    map[static_cast<std::size_t>(pos)] = w;
    if (iso_dfs(g, h, map, used | (std::uint64_t{1} << w), pos + 1)) return true;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg, dh;
  for (int v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  std::vector<int> map(static_cast<std::size_t>(g.order()), -1);
  return iso_dfs(g, h, map, 0, 0);
}

}  // namespace dompack
