#include "dompack/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dompack {

namespace {

std::uint64_t low_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Next larger integer with the same popcount (Gosper's hack).
std::uint64_t next_combination(std::uint64_t m) {
  std::uint64_t t = m | (m - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(m) + 1));
}

// Vertices reachable from `start` without leaving `inside`.
std::uint64_t flood(const Graph& g, int start, std::uint64_t inside) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f != 0) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.row(v);
    }
    next &= inside & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool connected_within(const Graph& g, std::uint64_t inside) {
  if (inside == 0) return true;
  int start = std::countr_zero(inside);
  return flood(g, start, inside) == inside;
}

}  // namespace

// ----- VertexSet -----

int VertexSet::size() const { return std::popcount(bits_); }

int VertexSet::lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  std::uint64_t b = bits_;
  while (b != 0) {
    out.push_back(std::countr_zero(b));
    b &= b - 1;
  }
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  s += '}';
  return s;
}

// ----- Diameter -----

Diameter Diameter::finite(int value) {
  if (value < 0) throw std::invalid_argument("diameter cannot be negative");
  Diameter d;
  d.value_ = value;
  return d;
}

Diameter Diameter::infinite() {
  Diameter d;
  d.infinite_ = true;
  return d;
}

int Diameter::value() const {
  if (infinite_) throw std::logic_error("diameter is infinite");
  return value_;
}

// ----- Graph -----

Graph::Graph(int n, std::vector<std::uint64_t> adj)
    : n_(n), full_(low_bits(n)), adj_(std::move(adj)) {}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("graph order must be in [1,64]");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  return Graph(n, std::move(adj));
}

Graph Graph::from_rows(int n, std::vector<std::uint64_t> rows) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("graph order must be in [1,64]");
  if (rows.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("row count must equal order");
  std::uint64_t full = low_bits(n);
  for (int v = 0; v < n; ++v) {
    std::uint64_t r = rows[static_cast<std::size_t>(v)];
    if ((r & ~full) != 0) throw std::invalid_argument("adjacency row mentions vertex out of range");
    if ((r >> v) & 1u) throw std::invalid_argument("self-loops are not allowed");
    std::uint64_t b = r;
    while (b != 0) {
      int u = std::countr_zero(b);
      b &= b - 1;
      if (!((rows[static_cast<std::size_t>(u)] >> v) & 1u))
        throw std::invalid_argument("adjacency rows are not symmetric");
    }
  }
  return Graph(n, std::move(rows));
}

int Graph::degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

int Graph::min_degree() const {
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

Graph Graph::complement() const {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v)
    adj[static_cast<std::size_t>(v)] = ~adj_[static_cast<std::size_t>(v)] & full_ & ~(std::uint64_t{1} << v);
  return Graph(n_, std::move(adj));
}

Graph Graph::disjoint_union(const Graph& other) const {
  int n = n_ + other.n_;
  if (n > kMaxOrder) throw std::invalid_argument("union exceeds 64 vertices");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n_; ++v) adj[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)];
  for (int v = 0; v < other.n_; ++v)
    adj[static_cast<std::size_t>(n_ + v)] = other.adj_[static_cast<std::size_t>(v)] << n_;
  return Graph(n, std::move(adj));
}

Graph Graph::induced_subgraph(VertexSet keep) const {
  if ((keep.bits() & ~full_) != 0) throw std::invalid_argument("subgraph vertices out of range");
  std::vector<int> verts = keep.vertices();
  int m = static_cast<int>(verts.size());
  if (m < 1) throw std::invalid_argument("induced subgraph needs at least one vertex");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (has_edge(verts[static_cast<std::size_t>(a)], verts[static_cast<std::size_t>(b)])) {
        adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
      }
  return Graph(m, std::move(adj));
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  std::uint64_t todo = full_;
  while (todo != 0) {
    int start = std::countr_zero(todo);
    std::uint64_t comp = flood(*this, start, full_);
    out.emplace_back(comp);
    todo &= ~comp;
  }
  return out;
}

bool Graph::is_connected() const { return connected_within(*this, full_); }

Diameter Graph::diameter() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) {
    std::uint64_t seen = std::uint64_t{1} << v;
    std::uint64_t frontier = seen;
    int ecc = 0;
    while (true) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f != 0) {
        int u = std::countr_zero(f);
        f &= f - 1;
        next |= adj_[static_cast<std::size_t>(u)];
      }
      next &= ~seen;
      if (next == 0) break;
      seen |= next;
      frontier = next;
      ++ecc;
    }
    if (seen != full_) return Diameter::infinite();
    best = std::max(best, ecc);
  }
  return Diameter::finite(best);
}

std::optional<VertexSet> Graph::min_vertex_cut() const {
  for (int s = 0; s <= n_ - 2; ++s) {
    if (s == 0) {
      std::uint64_t rest = full_;
      if (std::popcount(rest) >= 2 && !connected_within(*this, rest)) return VertexSet(0);
      continue;
    }
    for (std::uint64_t m = low_bits(s);; m = next_combination(m)) {
      if ((m & ~full_) != 0) break;
      std::uint64_t rest = full_ & ~m;
      if (std::popcount(rest) >= 2 && !connected_within(*this, rest)) return VertexSet(m);
    }
  }
  return std::nullopt;
}

int Graph::vertex_connectivity() const {
  auto cut = min_vertex_cut();
  return cut ? cut->size() : n_ - 1;
}

namespace {

// Branch and bound for the clique number inside `allowed`.
void clique_size_search(const Graph& g, std::uint64_t clique, std::uint64_t cand, int* best) {
  int have = std::popcount(clique);
  if (have + std::popcount(cand) <= *best) return;
  if (cand == 0) {
    *best = std::max(*best, have);
    return;
  }
  std::uint64_t c = cand;
  while (c != 0) {
    int v = std::countr_zero(c);
    c &= c - 1;
    clique_size_search(g, clique | (std::uint64_t{1} << v), cand & g.row(v) & ~low_bits(v + 1), best);
    if (have + std::popcount(c) <= *best) return;
  }
}

// Depth-first search for the smallest-mask clique of exactly `need` more
// vertices, all below `limit`, drawn from `common`.
bool clique_mask_search(const Graph& g, int need, int limit, std::uint64_t chosen,
                        std::uint64_t common, std::uint64_t* out) {
  if (need == 0) {
    *out = chosen;
    return true;
  }
  for (int m = need - 1; m < limit; ++m) {
    if (!((common >> m) & 1u)) continue;
    std::uint64_t next_common = common & g.row(m);
    if (std::popcount(next_common & low_bits(m)) < need - 1) continue;
    if (clique_mask_search(g, need - 1, m, chosen | (std::uint64_t{1} << m), next_common, out))
      return true;
  }
  return false;
}

}  // namespace

std::optional<VertexSet> find_clique_of_size(const Graph& g, VertexSet allowed, int size) {
  if (size < 0 || size > g.order()) return std::nullopt;
  std::uint64_t out = 0;
  if (!clique_mask_search(g, size, g.order(), 0, allowed.bits() & g.full_mask(), &out))
    return std::nullopt;
  return VertexSet(out);
}

VertexSet Graph::max_clique_within(VertexSet allowed) const {
  std::uint64_t cand = allowed.bits() & full_;
  if (cand == 0) return VertexSet(0);
  int best = 0;
  clique_size_search(*this, 0, cand, &best);
  return *find_clique_of_size(*this, allowed, best);
}

VertexSet Graph::max_clique() const { return max_clique_within(VertexSet(full_)); }

VertexSet Graph::max_independent_set() const { return complement().max_clique(); }

std::uint64_t Graph::hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (std::uint64_t r : adj_) mix(r);
  return h;
}

// ----- fixed families -----

Graph edgeless(int n) { return Graph::from_edge_list(n, {}); }

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::from_edge_list(n, edges);
}

Graph star(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edge_list(leaves + 1, edges);
}

Graph matching(int pairs) {
  if (pairs < 1) throw std::invalid_argument("matching needs at least one pair");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < pairs; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return Graph::from_edge_list(2 * pairs, edges);
}

}  // namespace dompack
