#pragma once

// Exact domination and packing parameters.
//
// The workhorse family is (k,k',k'')-domination: S is (k,k',k'')-dominating
// when every vertex of S has at least k neighbours in S, and every vertex
// outside S has at least k' neighbours in S and at least k'' neighbours
// outside S.  The named domination parameters are instances:
//
//   gamma            (0,1,0)      gamma_t          (1,1,0)
//   k-domination     (0,k,0)      k-tuple          (k-1,k,0)
//   double           (1,2,0)      restrained       (0,1,1)
//   restrained dbl   (1,2,1)
//
// Packing parameters count the other way: B is a k-limited packing when
// |N[v] ∩ B| <= k for every vertex, and a k-total limited packing when
// |N(v) ∩ B| <= k.  k = 1 gives the packing and open packing numbers.
//
// Minimizers return value -1 (kInfeasible) with no witness when no feasible
// set exists.  Witnesses are the optimum set with the smallest mask value.

#include <cstdint>
#include <optional>

#include "dompack/graph.hpp"

namespace dompack {

struct ParamResult {
  static constexpr int kInfeasible = -1;

  int value = kInfeasible;
  std::optional<VertexSet> witness;
  std::uint64_t graph_tag = 0;  // Graph::hash() of the evaluated graph

  bool feasible() const { return witness.has_value(); }
};

// ----- predicates -----

bool is_dominating(const Graph& g, VertexSet s);
bool is_total_dominating(const Graph& g, VertexSet s);
bool is_generalized_dominating(const Graph& g, VertexSet s, int k, int kp, int kpp);
bool is_k_dominating(const Graph& g, VertexSet s, int k);
bool is_packing(const Graph& g, VertexSet b);
bool is_open_packing(const Graph& g, VertexSet b);
bool is_limited_packing(const Graph& g, VertexSet b, int k);
bool is_total_limited_packing(const Graph& g, VertexSet b, int k);
// max degree of the induced subgraph on s is at most k-1
bool is_k_independent(const Graph& g, VertexSet s, int k);

// ----- optimized solvers -----

ParamResult generalized_domination_number(const Graph& g, int k, int kp, int kpp);
ParamResult domination_number(const Graph& g);
ParamResult total_domination_number(const Graph& g);
ParamResult k_domination_number(const Graph& g, int k);
ParamResult double_domination_number(const Graph& g);
ParamResult k_tuple_domination_number(const Graph& g, int k);
ParamResult restrained_domination_number(const Graph& g);
ParamResult restrained_double_domination_number(const Graph& g);

ParamResult limited_packing_number(const Graph& g, int k);        // closed counts
ParamResult total_limited_packing_number(const Graph& g, int k);  // open counts
ParamResult packing_number(const Graph& g);
ParamResult open_packing_number(const Graph& g);

// True when every set of fewer than `t` vertices fails to dominate; cheap
// hypothesis screen used by the random hunt.
bool domination_number_at_least(const Graph& g, int t);

}  // namespace dompack
