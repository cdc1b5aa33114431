#pragma once

// Constructive witness builders for the two complement-pair domination
// bounds, plus recognizers for the structural families that characterize
// equality in the packing bounds.
//
// Every choice the constructions could make freely is pinned to the
// lowest-index / smallest-mask candidate, so identical inputs always give
// identical certificates.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dompack/graph.hpp"

namespace dompack {

// The input graph fails the precondition of a construction (its domination
// numbers are too small).
class HypothesisNotMet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The procedure ran under a satisfied hypothesis but the produced set
// failed validation.  Never expected; worth reporting loudly if seen.
class ProofViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WitnessCertificate {
  int u = -1;                   // min-degree anchor (or cut-side anchor)
  int v0 = -1;                  // second anchor; the far side of the cut on the cut route
  std::optional<VertexSet> cut; // minimum vertex cut; cut route only
  VertexSet clique;             // clique in g of size gamma(complement)-2
  std::vector<int> anchors;     // the k clique vertices kept inside
  VertexSet result_set;
  int claimed_bound = 0;
};

// Builds a (k-1,k,j)-dominating set D of g with |D| = min_degree(g) -
// gamma(complement) + k + 2, anchored at a minimum-degree vertex.
// Requires gamma(g), gamma(complement) >= k+j+2.
WitnessCertificate min_degree_witness(const Graph& g, int k, int j);

// Builds a k-dominating set S of g inside a minimum vertex cut context with
// |S| <= vertex_connectivity(g) - gamma(complement) + k + 2.
// Requires gamma(g), gamma(complement) >= k+2.
WitnessCertificate vertex_cut_witness(const Graph& g, int k);

struct PiDecomposition {
  VertexSet hub;     // the one component carrying a universal and a pendant vertex
  int k2_count = 0;  // additional two-vertex components
  int k1_count = 0;  // isolated vertices
};

struct FamilyVerdict {
  bool member = false;
  std::optional<std::pair<int, int>> witness_pair;     // (u, v) of the structure search
  std::optional<PiDecomposition> decomposition;
};

// Structure behind packing-extremal graphs: some maximum-degree vertex u
// has a neighbour v with N[v] contained in N[u], everything outside N[u]
// independent, no vertex of N[v] sending any edge outside N[u], and each
// vertex of N[u] minus N[v] sending at most one edge outside N[u].  These
// are exactly the graphs where {v} plus V minus N[u] is a packing, hence
// where the packing number reaches n minus max degree.  Requires
// max_degree >= 1.
FamilyVerdict packing_extremal_structure(const Graph& g);

// Value-side check: packing_number(g) == n - max_degree(g).
bool packing_extremal_value(const Graph& g);

// One vertex adjacent to everything plus one vertex of degree one.
bool is_universal_pendant_graph(const Graph& g);

// Decomposition behind open-packing-extremal graphs: one universal-pendant
// component plus any number of two-vertex components and isolated vertices.
FamilyVerdict open_packing_extremal_structure(const Graph& g);

// Value-side check: open_packing_number(g) == n - max_degree(g) + 1.
bool open_packing_extremal_value(const Graph& g);

// True when {g, complement(g)} matches, up to isomorphism, one of the three
// pairs that reach open-packing sum n+2: {2K2, C4}, {K2, 2K1}, {P3, co-P3}.
bool is_open_packing_sum_extremal_pair(const Graph& g);

}  // namespace dompack
