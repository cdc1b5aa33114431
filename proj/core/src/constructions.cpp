#include "dompack/constructions.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dompack/invariants.hpp"
#include "dompack/isomorphism.hpp"

namespace dompack {

namespace {

std::string gamma_pair_text(int gg, int gc) {
  return "gamma(g)=" + std::to_string(gg) + ", gamma(complement)=" + std::to_string(gc);
}

// lowest `count` set bits of `mask`
std::uint64_t lowest_bits(std::uint64_t mask, int count) {
  std::uint64_t out = 0;
  for (int i = 0; i < count && mask != 0; ++i) {
    std::uint64_t bit = mask & (~mask + 1);
    out |= bit;
    mask &= ~bit;
  }
  return out;
}

}  // namespace

WitnessCertificate min_degree_witness(const Graph& g, int k, int j) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (j < 0) throw std::invalid_argument("j must be nonnegative");

  Graph gc = g.complement();
  int gamma_g = domination_number(g).value;
  int gamma_c = domination_number(gc).value;
  if (gamma_g < k + j + 2 || gamma_c < k + j + 2)
    throw HypothesisNotMet("need both domination numbers >= k+j+2; got " +
                           gamma_pair_text(gamma_g, gamma_c));

  int delta = g.min_degree();
  int u = 0;
  while (g.degree(u) != delta) ++u;
  int bound = delta - gamma_c + k + 2;
  int clique_size = gamma_c - 2;

  // The second anchor is in principle arbitrary; try the lowest index first
  // and fall back to every other vertex before giving up.
  for (int v0 = 0; v0 < g.order(); ++v0) {
    if (v0 == u) continue;
    std::uint64_t excluded = gc.closed_row(u) | gc.closed_row(v0);
    std::uint64_t w0 = g.full_mask() & ~excluded;
    if (w0 == 0) continue;

    VertexSet x0 = g.max_clique_within(VertexSet(w0));
    if (x0.size() < clique_size) continue;
    std::uint64_t x0p = lowest_bits(x0.bits(), clique_size);
    std::uint64_t kept = lowest_bits(x0p, k);
    std::uint64_t d = g.row(u) & ~(x0p & ~kept);

    if (static_cast<int>(std::popcount(d)) > bound) continue;
    if (!is_generalized_dominating(g, VertexSet(d), k - 1, k, j)) continue;

    WitnessCertificate cert;
    cert.u = u;
    cert.v0 = v0;
    cert.clique = VertexSet(x0p);
    cert.anchors = VertexSet(kept).vertices();
    cert.result_set = VertexSet(d);
    cert.claimed_bound = bound;
    return cert;
  }
  throw ProofViolation("no second anchor produced a valid dominating set");
}

WitnessCertificate vertex_cut_witness(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");

  Graph gc = g.complement();
  int gamma_g = domination_number(g).value;
  int gamma_c = domination_number(gc).value;
  if (gamma_g < k + 2 || gamma_c < k + 2)
    throw HypothesisNotMet("need both domination numbers >= k+2; got " +
                           gamma_pair_text(gamma_g, gamma_c));

  auto cut = g.min_vertex_cut();
  if (!cut) throw HypothesisNotMet("graph is complete, no vertex cut exists");

  std::uint64_t rest = g.full_mask() & ~cut->bits();
  int u = std::countr_zero(rest);
  std::uint64_t first_comp = 0;
  {
    // flood u's component within g - A
    std::uint64_t seen = std::uint64_t{1} << u;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= g.row(std::countr_zero(f));
      next &= rest & ~seen;
      seen |= next;
      frontier = next;
    }
    first_comp = seen;
  }
  std::uint64_t other = rest & ~first_comp;
  if (other == 0) throw ProofViolation("cut removal left a single component");
  int v = std::countr_zero(other);

  int clique_size = gamma_c - 2;
  VertexSet candidates = VertexSet(cut->bits() & g.row(u) & g.row(v));
  auto x = find_clique_of_size(g, candidates, clique_size);
  if (!x) throw ProofViolation("no clique of size gamma(complement)-2 inside the cut");

  std::uint64_t kept = lowest_bits(x->bits(), k);
  std::uint64_t s = cut->bits() & ~(x->bits() & ~kept);
  int bound = cut->size() - gamma_c + k + 2;

  if (static_cast<int>(std::popcount(s)) > bound)
    throw ProofViolation("constructed set exceeds the claimed bound");
  if (!is_k_dominating(g, VertexSet(s), k))
    throw ProofViolation("constructed set is not k-dominating");

  WitnessCertificate cert;
  cert.u = u;
  cert.v0 = v;
  cert.cut = *cut;
  cert.clique = *x;
  cert.anchors = VertexSet(kept).vertices();
  cert.result_set = VertexSet(s);
  cert.claimed_bound = bound;
  return cert;
}

// ----- family recognizers -----

FamilyVerdict packing_extremal_structure(const Graph& g) {
  if (g.max_degree() < 1)
    throw std::invalid_argument("structure needs at least one edge");
  FamilyVerdict verdict;
  int dmax = g.max_degree();
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) != dmax) continue;
    std::uint64_t outside = g.full_mask() & ~g.closed_row(u);
    bool outside_independent = true;
    for (std::uint64_t m = outside; m != 0; m &= m - 1)
      if ((g.row(std::countr_zero(m)) & outside) != 0) {
        outside_independent = false;
        break;
      }
    if (!outside_independent) continue;
    for (std::uint64_t m = g.row(u); m != 0; m &= m - 1) {
      int v = std::countr_zero(m);
      if ((g.closed_row(v) & ~g.closed_row(u)) != 0) continue;
      // {v} together with V \ N[u] must have pairwise disjoint closed
      // neighborhoods: vertices of N[v] may reach nothing outside N[u],
      // and the rest of N[u] may reach at most one outside vertex.
      std::uint64_t core = g.closed_row(v);
      std::uint64_t boundary = g.closed_row(u) & ~core;
      bool compatible = true;
      for (std::uint64_t b = core; b != 0; b &= b - 1)
        if ((g.row(std::countr_zero(b)) & outside) != 0) {
          compatible = false;
          break;
        }
      for (std::uint64_t b = boundary; compatible && b != 0; b &= b - 1)
        if (std::popcount(g.row(std::countr_zero(b)) & outside) > 1)
          compatible = false;
      if (compatible) {
        verdict.member = true;
        verdict.witness_pair = {u, v};
        return verdict;
      }
    }
  }
  return verdict;
}

bool packing_extremal_value(const Graph& g) {
  return packing_number(g).value == g.order() - g.max_degree();
}

bool is_universal_pendant_graph(const Graph& g) {
  return g.max_degree() == g.order() - 1 && g.min_degree() == 1;
}

namespace {

bool universal_pendant_within(const Graph& g, std::uint64_t comp) {
  int size = std::popcount(comp);
  int dmin = size, dmax = 0;
  for (std::uint64_t m = comp; m != 0; m &= m - 1) {
    int d = std::popcount(g.row(std::countr_zero(m)) & comp);
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }
  return dmax == size - 1 && dmin == 1;
}

}  // namespace

FamilyVerdict open_packing_extremal_structure(const Graph& g) {
  FamilyVerdict verdict;
  std::vector<VertexSet> comps = g.components();
  std::vector<VertexSet> larger;
  int k1 = 0, k2 = 0;
  for (const VertexSet& c : comps) {
    if (c.size() == 1)
      ++k1;
    else if (c.size() == 2)
      ++k2;  // a connected pair is an edge
    else
      larger.push_back(c);
  }
  if (larger.size() > 1) return verdict;
  if (larger.size() == 1) {
    if (!universal_pendant_within(g, larger[0].bits())) return verdict;
    verdict.member = true;
    verdict.decomposition = PiDecomposition{larger[0], k2, k1};
    return verdict;
  }
  // no large component: one of the edges can serve as the hub (an edge is
  // itself universal-plus-pendant), an isolated vertex cannot
  if (k2 >= 1) {
    VertexSet hub;
    for (const VertexSet& c : comps)
      if (c.size() == 2) {
        hub = c;
        break;
      }
    verdict.member = true;
    verdict.decomposition = PiDecomposition{hub, k2 - 1, k1};
  }
  return verdict;
}

bool open_packing_extremal_value(const Graph& g) {
  return open_packing_number(g).value == g.order() - g.max_degree() + 1;
}

bool is_open_packing_sum_extremal_pair(const Graph& g) {
  int n = g.order();
  if (n != 2 && n != 3 && n != 4) return false;
  Graph gc = g.complement();
  auto pair_matches = [&](const Graph& a, const Graph& b) {
    return (is_isomorphic(g, a) && is_isomorphic(gc, b)) ||
           (is_isomorphic(g, b) && is_isomorphic(gc, a));
  };
  if (n == 4) return pair_matches(matching(2), cycle(4));
  if (n == 2) return pair_matches(complete(2), edgeless(2));
  return pair_matches(path(3), path(3).complement());
}

}  // namespace dompack
