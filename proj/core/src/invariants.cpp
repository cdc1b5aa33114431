#include "dompack/invariants.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dompack {

namespace {

void check_subset(const Graph& g, VertexSet s) {
  if ((s.bits() & ~g.full_mask()) != 0)
    throw std::invalid_argument("vertex set mentions vertices outside the graph");
}

void check_counts(int k, int kp, int kpp) {
  if (k < 0 || kp < 0 || kpp < 0) throw std::invalid_argument("count thresholds must be nonnegative");
}

std::uint64_t low_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

// ----- predicates -----

bool is_dominating(const Graph& g, VertexSet s) {
  check_subset(g, s);
  std::uint64_t covered = s.bits();
  std::uint64_t m = s.bits();
  while (m != 0) {
    int v = std::countr_zero(m);
    m &= m - 1;
    covered |= g.row(v);
  }
  return covered == g.full_mask();
}

bool is_total_dominating(const Graph& g, VertexSet s) {
  check_subset(g, s);
  for (int v = 0; v < g.order(); ++v)
    if ((g.row(v) & s.bits()) == 0) return false;
  return true;
}

bool is_generalized_dominating(const Graph& g, VertexSet s, int k, int kp, int kpp) {
  check_subset(g, s);
  check_counts(k, kp, kpp);
  std::uint64_t in = s.bits();
  std::uint64_t out = g.full_mask() & ~in;
  for (int v = 0; v < g.order(); ++v) {
    std::uint64_t r = g.row(v);
    if ((in >> v) & 1u) {
      if (std::popcount(r & in) < k) return false;
    } else {
      if (std::popcount(r & in) < kp) return false;
      if (std::popcount(r & out) < kpp) return false;
    }
  }
  return true;
}

bool is_k_dominating(const Graph& g, VertexSet s, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  return is_generalized_dominating(g, s, 0, k, 0);
}

bool is_limited_packing(const Graph& g, VertexSet b, int k) {
  check_subset(g, b);
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  for (int v = 0; v < g.order(); ++v)
    if (std::popcount(g.closed_row(v) & b.bits()) > k) return false;
  return true;
}

bool is_total_limited_packing(const Graph& g, VertexSet b, int k) {
  check_subset(g, b);
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  for (int v = 0; v < g.order(); ++v)
    if (std::popcount(g.row(v) & b.bits()) > k) return false;
  return true;
}

bool is_packing(const Graph& g, VertexSet b) { return is_limited_packing(g, b, 1); }

bool is_open_packing(const Graph& g, VertexSet b) { return is_total_limited_packing(g, b, 1); }

bool is_k_independent(const Graph& g, VertexSet s, int k) {
  check_subset(g, s);
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::uint64_t m = s.bits();
  while (m != 0) {
    int v = std::countr_zero(m);
    m &= m - 1;
    if (std::popcount(g.row(v) & s.bits()) > k - 1) return false;
  }
  return true;
}

// ----- generalized domination solver -----
//
// Vertices are decided from index n-1 down to 0, the "out" branch before the
// "in" branch, so feasible sets are met in increasing mask order and the
// first hit at the optimal size is the smallest witness.

namespace {

struct DomSearch {
  const Graph* g;
  int n;
  int a, b, c;  // thresholds: in-S, outside-in, outside-out
  int target;
  std::uint64_t full;
  std::uint64_t found = 0;

  bool dfs(int v, std::uint64_t in, std::uint64_t out) {
    int chosen = std::popcount(in);
    int rem = target - chosen;
    if (rem < 0 || rem > v + 1) return false;
    std::uint64_t undec = low_bits(v + 1);
    // every decided vertex must still be satisfiable
    for (std::uint64_t m = (in | out) & ~undec; m != 0; m &= m - 1) {
      int u = std::countr_zero(m);
      std::uint64_t r = g->row(u);
      int pot = std::popcount(r & undec);
      int have_in = std::popcount(r & in);
      if ((in >> u) & 1u) {
        if (have_in + std::min(rem, pot) < a) return false;
      } else {
        if (have_in + std::min(rem, pot) < b) return false;
        if (c > 0) {
          int undec_nonnb = (v + 1) - pot;
          int forced_in_nbrs = std::max(0, rem - undec_nonnb);
          if (std::popcount(r & out) + pot - forced_in_nbrs < c) return false;
        }
      }
    }
    if (v < 0) {
      if (!is_generalized_dominating(*g, VertexSet(in), a, b, c)) return false;
      found = in;
      return true;
    }
    std::uint64_t bit = std::uint64_t{1} << v;
    if (dfs(v - 1, in, out | bit)) return true;
    return dfs(v - 1, in | bit, out);
  }
};

}  // namespace

ParamResult generalized_domination_number(const Graph& g, int k, int kp, int kpp) {
  check_counts(k, kp, kpp);
  ParamResult res;
  res.graph_tag = g.hash();
  // a vertex that can sit neither inside nor outside makes every size fail
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < k && g.degree(v) < kp + kpp) return res;
  DomSearch s{&g, g.order(), k, kp, kpp, 0, g.full_mask(), 0};
  for (int size = 0; size <= g.order(); ++size) {
    s.target = size;
    if (s.dfs(g.order() - 1, 0, 0)) {
      res.value = size;
      res.witness = VertexSet(s.found);
      return res;
    }
  }
  return res;
}

ParamResult domination_number(const Graph& g) { return generalized_domination_number(g, 0, 1, 0); }

ParamResult total_domination_number(const Graph& g) { return generalized_domination_number(g, 1, 1, 0); }

ParamResult k_domination_number(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  return generalized_domination_number(g, 0, k, 0);
}

ParamResult double_domination_number(const Graph& g) { return generalized_domination_number(g, 1, 2, 0); }

ParamResult k_tuple_domination_number(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  return generalized_domination_number(g, k - 1, k, 0);
}

ParamResult restrained_domination_number(const Graph& g) {
  return generalized_domination_number(g, 0, 1, 1);
}

ParamResult restrained_double_domination_number(const Graph& g) {
  return generalized_domination_number(g, 1, 2, 1);
}

// ----- limited packing solver -----
//
// Same decision order as above; the count constraint is monotone, so a
// violated vertex kills the whole branch.

namespace {

struct PackSearch {
  const Graph* g;
  int n;
  int k;
  bool closed;
  int target;
  int counts[Graph::kMaxOrder] = {};
  std::uint64_t found = 0;

  bool dfs(int v, int chosen, std::uint64_t b) {
    int rem = target - chosen;
    if (rem < 0 || rem > v + 1) return false;
    if (v < 0) {
      found = b;
      return true;
    }
    if (dfs(v - 1, chosen, b)) return true;
    std::uint64_t touched = closed ? g->closed_row(v) : g->row(v);
    bool fits = true;
    for (std::uint64_t m = touched; m != 0; m &= m - 1) {
      int u = std::countr_zero(m);
      if (++counts[u] > k) fits = false;
    }
    bool ok = fits && dfs(v - 1, chosen + 1, b | (std::uint64_t{1} << v));
    for (std::uint64_t m = touched; m != 0; m &= m - 1) --counts[std::countr_zero(m)];
    return ok;
  }
};

}  // namespace

ParamResult limited_packing_number(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  ParamResult res;
  res.graph_tag = g.hash();
  PackSearch s{};
  s.g = &g;
  s.n = g.order();
  s.k = k;
  s.closed = true;
  for (int size = g.order(); size >= 0; --size) {
    s.target = size;
    if (s.dfs(g.order() - 1, 0, 0)) {
      res.value = size;
      res.witness = VertexSet(s.found);
      return res;
    }
  }
  return res;  // unreachable: the empty set is always a packing
}

ParamResult total_limited_packing_number(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  ParamResult res;
  res.graph_tag = g.hash();
  PackSearch s{};
  s.g = &g;
  s.n = g.order();
  s.k = k;
  s.closed = false;
  for (int size = g.order(); size >= 0; --size) {
    s.target = size;
    if (s.dfs(g.order() - 1, 0, 0)) {
      res.value = size;
      res.witness = VertexSet(s.found);
      return res;
    }
  }
  return res;
}

ParamResult packing_number(const Graph& g) { return limited_packing_number(g, 1); }

ParamResult open_packing_number(const Graph& g) { return total_limited_packing_number(g, 1); }

bool domination_number_at_least(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("threshold must be positive");
  for (int s = 1; s < t; ++s) {
    if (s > g.order()) break;
    std::uint64_t m = low_bits(s);
    while ((m & ~g.full_mask()) == 0) {
      std::uint64_t covered = m;
      for (std::uint64_t x = m; x != 0; x &= x - 1) covered |= g.row(std::countr_zero(x));
      if (covered == g.full_mask()) return false;
      std::uint64_t tt = m | (m - 1);
      std::uint64_t next = (tt + 1) | (((~tt & (tt + 1)) - 1) >> (std::countr_zero(m) + 1));
      if (next <= m) break;
      m = next;
    }
  }
  return true;
}

}  // namespace dompack
