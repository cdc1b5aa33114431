#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "dompack/enumerate.hpp"
#include "dompack/isomorphism.hpp"
#include "dompack/verify.hpp"

using namespace dompack;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edge_list(g.order(), edges);
}

}  // namespace

TEST_CASE("isomorphism on named graphs") {
  CHECK(is_isomorphic(cycle(5), cycle(5).complement()));
  CHECK(is_isomorphic(path(4), path(4).complement()));
  CHECK(is_isomorphic(matching(2).complement(), cycle(4)));
  CHECK(is_isomorphic(path(3).complement(), complete(2).disjoint_union(edgeless(1))));
  CHECK(!is_isomorphic(star(3), path(4)));  // same order and size, different degrees
  CHECK(!is_isomorphic(cycle(6), matching(3)));
  CHECK(is_isomorphic(edgeless(1), complete(1)));
}

TEST_CASE("canonical key is a relabelling invariant") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, rng);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = relabel(g, perm);
    CHECK(canonical_key(g) == canonical_key(h));
    CHECK(is_isomorphic(g, h));
    CHECK(is_isomorphic(graph_from_key(canonical_key(g), n), g));
  }
}

TEST_CASE("canonical key separates non-isomorphic graphs") {
  // pairwise distinct keys across one full iso corpus
  std::vector<Graph> reps = enumerate_iso_classes(5);
  REQUIRE(reps.size() == 34);
  std::set<std::uint64_t> keys;
  for (const Graph& g : reps) keys.insert(canonical_key(g));
  CHECK(keys.size() == 34);
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b)
      CHECK(!is_isomorphic(reps[a], reps[b]));
}

TEST_CASE("canonical key separates orders") {
  // one edge at order 2 vs one edge plus an isolated vertex: same triangle
  // prefix, different graphs
  CHECK(canonical_key(complete(2)) != canonical_key(path(3).complement()));
  CHECK(canonical_key(edgeless(1)) != canonical_key(edgeless(2)));
  std::set<std::uint64_t> keys;
  int total = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_iso_classes(n)) {
      keys.insert(canonical_key(g));
      ++total;
    }
  CHECK(static_cast<int>(keys.size()) == total);
  // a key only rebuilds at its own order
  CHECK_THROWS_AS(graph_from_key(canonical_key(complete(2)), 3), std::invalid_argument);
}

TEST_CASE("class counts") {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    std::size_t count = 0;
    enumerate_graphs(n, true, [&](const Graph& g) {
      ++count;
      CHECK(g.order() == n);
    });
    CHECK(count == expected[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("labelled counts and dedup cross-check") {
  std::size_t labelled = 0;
  std::set<std::uint64_t> keys;
  enumerate_graphs(4, false, [&](const Graph& g) {
    ++labelled;
    keys.insert(canonical_key(g));
  });
  CHECK(labelled == 64);  // 2^C(4,2)
  CHECK(keys.size() == 11);

  std::size_t n1 = 0;
  enumerate_graphs(1, false, [&](const Graph&) { ++n1; });
  CHECK(n1 == 1);
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(enumerate_graphs(9, true, [](const Graph&) {}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(8, false, [](const Graph&) {}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(0, true, [](const Graph&) {}), std::invalid_argument);
}
