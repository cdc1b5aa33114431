#pragma once

// Reference solver: plain enumeration of all 2^n vertex subsets with a
// naive per-vertex predicate check.  Slow on purpose; it exists so the
// optimized solvers have something independent to be judged against.

#include "dompack/graph.hpp"
#include "dompack/invariants.hpp"

namespace dompack {

enum class OracleFamily {
  kGeneralizedDomination,  // thresholds (k, kp, kpp)
  kClosedLimitedPacking,   // threshold k
  kOpenLimitedPacking,     // threshold k
};

enum class OracleObjective { kMinimize, kMaximize };

// Ties break exactly like the optimized solvers: the optimum reached first
// in increasing mask order wins.  Order is capped at 24 to keep the
// enumeration finite in practice.
ParamResult oracle_param(const Graph& g, OracleFamily family, OracleObjective objective,
                         int k, int kp = 0, int kpp = 0);

}  // namespace dompack
