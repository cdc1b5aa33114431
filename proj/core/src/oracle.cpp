#include "dompack/oracle.hpp"

#include <stdexcept>

namespace dompack {

namespace {

bool naive_check(const Graph& g, std::uint64_t mask, OracleFamily family, int k, int kp, int kpp) {
  int n = g.order();
  switch (family) {
    case OracleFamily::kGeneralizedDomination:
      for (int v = 0; v < n; ++v) {
        int inside = 0, outside = 0;
        for (int u = 0; u < n; ++u) {
          if (u == v || !g.has_edge(v, u)) continue;
          if ((mask >> u) & 1u)
            ++inside;
          else
            ++outside;
        }
        if ((mask >> v) & 1u) {
          if (inside < k) return false;
        } else {
          if (inside < kp || outside < kpp) return false;
        }
      }
      return true;
    case OracleFamily::kClosedLimitedPacking:
      for (int v = 0; v < n; ++v) {
        int hits = (mask >> v) & 1u;
        for (int u = 0; u < n; ++u)
          if (u != v && g.has_edge(v, u) && ((mask >> u) & 1u)) ++hits;
        if (hits > k) return false;
      }
      return true;
    case OracleFamily::kOpenLimitedPacking:
      for (int v = 0; v < n; ++v) {
        int hits = 0;
        for (int u = 0; u < n; ++u)
          if (u != v && g.has_edge(v, u) && ((mask >> u) & 1u)) ++hits;
        if (hits > k) return false;
      }
      return true;
  }
  return false;
}

int count_bits(std::uint64_t mask) {
  int c = 0;
  while (mask != 0) {
    c += static_cast<int>(mask & 1u);
    mask >>= 1;
  }
  return c;
}

}  // namespace

ParamResult oracle_param(const Graph& g, OracleFamily family, OracleObjective objective,
                         int k, int kp, int kpp) {
  if (g.order() > 24) throw std::invalid_argument("oracle enumeration capped at order 24");
  if (k < 0 || kp < 0 || kpp < 0) throw std::invalid_argument("count thresholds must be nonnegative");
  ParamResult res;
  res.graph_tag = g.hash();
  std::uint64_t top = std::uint64_t{1} << g.order();
  for (std::uint64_t mask = 0; mask < top; ++mask) {
    if (!naive_check(g, mask, family, k, kp, kpp)) continue;
    int size = count_bits(mask);
    bool better = !res.feasible() || (objective == OracleObjective::kMinimize ? size < res.value
                                                                              : size > res.value);
    if (better) {
      res.value = size;
      res.witness = VertexSet(mask);
    }
  }
  return res;
}

}  // namespace dompack
