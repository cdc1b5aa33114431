#include <doctest.h>

#include <random>
#include <vector>

#include "dompack/enumerate.hpp"
#include "dompack/invariants.hpp"
#include "dompack/oracle.hpp"
#include "dompack/verify.hpp"

using namespace dompack;

namespace {

// the (k,k',k'') grid exercised throughout: named parameters plus the
// generalized instances the bound checks use
const std::vector<std::array<int, 3>> kDomGrid = {
    {0, 1, 0}, {1, 1, 0}, {0, 2, 0}, {0, 3, 0}, {1, 2, 0},
    {2, 3, 0}, {0, 1, 1}, {1, 2, 1}, {2, 3, 1},
};

int oracle_dom(const Graph& g, int k, int kp, int kpp) {
  return oracle_param(g, OracleFamily::kGeneralizedDomination, OracleObjective::kMinimize, k, kp,
                      kpp)
      .value;
}

int oracle_pack(const Graph& g, int k, bool closed) {
  return oracle_param(g,
                      closed ? OracleFamily::kClosedLimitedPacking
                             : OracleFamily::kOpenLimitedPacking,
                      OracleObjective::kMaximize, k)
      .value;
}

}  // namespace

TEST_CASE("domination predicates") {
  Graph c4 = cycle(4);
  CHECK(is_dominating(complete(5), VertexSet::single(3)));
  CHECK(!is_dominating(c4, VertexSet::single(0)));  // vertex 2 uncovered
  CHECK(is_dominating(c4, VertexSet()) == false);
  CHECK(is_dominating(c4, VertexSet::first_n(4)));

  CHECK(is_total_dominating(c4, VertexSet::first_n(2)));
  CHECK(!is_total_dominating(complete(2), VertexSet::single(0)));
  CHECK(!is_total_dominating(complete(2).disjoint_union(edgeless(1)), VertexSet::first_n(3)));

  CHECK(is_generalized_dominating(c4, VertexSet::first_n(3), 1, 2, 0));
  CHECK(!is_generalized_dominating(c4, VertexSet::single(0) | VertexSet::single(2), 1, 2, 0));
  CHECK(is_generalized_dominating(c4, VertexSet::first_n(4), 2, 0, 0));
  CHECK(is_k_dominating(c4, VertexSet::single(0) | VertexSet::single(2), 2));
}

TEST_CASE("packing predicates") {
  Graph p3 = path(3);
  VertexSet ends = VertexSet::single(0) | VertexSet::single(2);
  CHECK(!is_packing(p3, ends));       // |N[1] ∩ B| = 2
  CHECK(!is_open_packing(p3, ends));  // 1 is a common open neighbour of 0, 2
  CHECK(is_open_packing(p3, VertexSet::first_n(2)));
  CHECK(is_packing(p3, VertexSet::single(1)));
  CHECK(is_open_packing(matching(2), VertexSet::first_n(4)));
  CHECK(is_packing(p3, VertexSet()));
  CHECK(is_open_packing(p3, VertexSet()));

  CHECK(is_limited_packing(complete(4), VertexSet::first_n(2), 2));
  CHECK(!is_limited_packing(complete(4), VertexSet::first_n(3), 2));
  CHECK(!is_limited_packing(complete(4), VertexSet::first_n(1), 0));
  CHECK(is_limited_packing(complete(4), VertexSet(), 0));
  CHECK(is_total_limited_packing(edgeless(2), VertexSet::first_n(2), 0));
  CHECK(is_total_limited_packing(cycle(4), VertexSet::first_n(2), 1));

  CHECK(is_k_independent(matching(2), VertexSet::first_n(4), 2));
  CHECK(!is_k_independent(complete(3), VertexSet::first_n(3), 2));
  CHECK(is_k_independent(complete(3), VertexSet(), 1));
  CHECK(is_k_independent(cycle(4), VertexSet::single(0) | VertexSet::single(2), 1));
}

TEST_CASE("hand-computed optima pin both solver and oracle") {
  struct Row {
    Graph g;
    int gamma, gamma_t, dd, rho, rho_o;
  };
  // gamma_t/dd use -1 for infeasible
  const std::vector<Row> rows = {
      {cycle(4), 2, 2, 3, 1, 2},
      {cycle(5), 2, 3, 4, 1, 2},
      {path(4), 2, 2, 4, 2, 2},
      {complete(4), 1, 2, 2, 1, 1},
      {matching(2), 2, 4, 4, 2, 4},
      {star(3), 1, 2, 4, 1, 2},
      {path(3), 1, 2, 3, 1, 2},
      {complete(2).disjoint_union(edgeless(1)), 2, -1, -1, 2, 3},
      {edgeless(3), 3, -1, -1, 3, 3},
  };
  for (const Row& row : rows) {
    CAPTURE(row.g.order());
    CAPTURE(row.g.edge_count());
    CHECK(domination_number(row.g).value == row.gamma);
    CHECK(total_domination_number(row.g).value == row.gamma_t);
    CHECK(double_domination_number(row.g).value == row.dd);
    CHECK(packing_number(row.g).value == row.rho);
    CHECK(open_packing_number(row.g).value == row.rho_o);

    CHECK(oracle_dom(row.g, 0, 1, 0) == row.gamma);
    CHECK(oracle_dom(row.g, 1, 1, 0) == row.gamma_t);
    CHECK(oracle_dom(row.g, 1, 2, 0) == row.dd);
    CHECK(oracle_pack(row.g, 1, true) == row.rho);
    CHECK(oracle_pack(row.g, 1, false) == row.rho_o);
  }

  CHECK(k_domination_number(cycle(4), 2).value == 2);
  CHECK(k_domination_number(cycle(5), 2).value == 3);
  CHECK(restrained_domination_number(cycle(4)).value == 2);
  CHECK(restrained_domination_number(path(4)).value == 2);
  CHECK(restrained_double_domination_number(cycle(5)).value == 5);
  CHECK(limited_packing_number(cycle(5), 2).value == 3);
  CHECK(total_limited_packing_number(matching(2), 1).value == 4);
}

TEST_CASE("witnesses are optimal, feasible, and smallest-mask") {
  Graph c4 = cycle(4);
  ParamResult dd = double_domination_number(c4);
  REQUIRE(dd.feasible());
  CHECK(dd.value == 3);
  CHECK(*dd.witness == VertexSet::first_n(3));  // {0,1,2} beats {0,1,3} etc.

  ParamResult g2 = k_domination_number(c4, 2);
  REQUIRE(g2.feasible());
  CHECK(*g2.witness == (VertexSet::single(0) | VertexSet::single(2)));

  ParamResult inf = total_domination_number(complete(2).disjoint_union(edgeless(1)));
  CHECK(inf.value == ParamResult::kInfeasible);
  CHECK(!inf.feasible());
  CHECK(!inf.witness.has_value());
}

TEST_CASE("solver equals oracle across the n<=5 corpus") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_iso_classes(n)) {
      CAPTURE(n);
      for (const auto& [k, kp, kpp] : kDomGrid) {
        ParamResult fast = generalized_domination_number(g, k, kp, kpp);
        ParamResult slow = oracle_param(g, OracleFamily::kGeneralizedDomination,
                                        OracleObjective::kMinimize, k, kp, kpp);
        CHECK(fast.value == slow.value);
        CHECK(fast.witness == slow.witness);  // identical tie-break
      }
      for (int k = 1; k <= 3; ++k) {
        ParamResult fast_c = limited_packing_number(g, k);
        ParamResult slow_c = oracle_param(g, OracleFamily::kClosedLimitedPacking,
                                          OracleObjective::kMaximize, k);
        CHECK(fast_c.value == slow_c.value);
        CHECK(fast_c.witness == slow_c.witness);
        ParamResult fast_o = total_limited_packing_number(g, k);
        ParamResult slow_o = oracle_param(g, OracleFamily::kOpenLimitedPacking,
                                          OracleObjective::kMaximize, k);
        CHECK(fast_o.value == slow_o.value);
        CHECK(fast_o.witness == slow_o.witness);
      }
    }
  }
}

TEST_CASE("parameter relations on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(3 + static_cast<int>(rng() % 6), rng);
    int gamma = domination_number(g).value;
    CHECK(gamma >= 1);
    CHECK(packing_number(g).value <= gamma);
    CHECK(limited_packing_number(g, 1).value == packing_number(g).value);
    CHECK(total_limited_packing_number(g, 1).value == open_packing_number(g).value);
    CHECK(k_tuple_domination_number(g, 1).value == gamma);
    CHECK(k_domination_number(g, 1).value == gamma);
    // k-domination tightens with k
    CHECK(k_domination_number(g, 2).value >= gamma);
    CHECK(k_domination_number(g, 3).value >= k_domination_number(g, 2).value);
    int gt = total_domination_number(g).value;
    if (g.min_degree() >= 1) {
      CHECK(gt >= gamma);
      CHECK(gt <= 2 * gamma);
      CHECK(open_packing_number(g).value <= gt);
    } else {
      CHECK(gt == ParamResult::kInfeasible);
    }
  }
}

TEST_CASE("domination threshold screen") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 7), rng);
    int gamma = domination_number(g).value;
    for (int t = 1; t <= 4; ++t)
      CHECK(domination_number_at_least(g, t) == (gamma >= t));
  }
  CHECK(domination_number_at_least(complete(3), 1));
  CHECK(!domination_number_at_least(complete(3), 2));
}

TEST_CASE("every feasible result passes its own predicate") {
  for (const Graph& g : enumerate_iso_classes(4)) {
    for (const auto& [k, kp, kpp] : kDomGrid) {
      ParamResult r = generalized_domination_number(g, k, kp, kpp);
      if (!r.feasible()) continue;
      CHECK(is_generalized_dominating(g, *r.witness, k, kp, kpp));
      CHECK(r.witness->size() == r.value);
      CHECK(r.graph_tag == g.hash());
    }
    for (int k = 1; k <= 2; ++k) {
      ParamResult c = limited_packing_number(g, k);
      CHECK(is_limited_packing(g, *c.witness, k));
      CHECK(c.witness->size() == c.value);
      ParamResult o = total_limited_packing_number(g, k);
      CHECK(is_total_limited_packing(g, *o.witness, k));
      CHECK(o.witness->size() == o.value);
    }
  }
}
