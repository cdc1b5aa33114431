#pragma once

#include <cstdint>

#include "dompack/graph.hpp"

namespace dompack {

// Canonical 64-bit key for graphs of order <= 11: the maximum, over all
// vertex relabellings, of the upper-triangle bit string packed from the
// most significant bit down, with the order in the low bits.  Equal keys
// mean isomorphic graphs, across orders too.
std::uint64_t canonical_key(const Graph& g);

// Rebuilds the graph a key encodes (inverse of the packing above); n must
// match the order stored in the key.
Graph graph_from_key(std::uint64_t key, int n);

// Direct permutation search with degree pruning; independent of
// canonical_key so the two can cross-check each other.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace dompack
