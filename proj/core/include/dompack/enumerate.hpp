#pragma once

#include <functional>
#include <vector>

#include "dompack/graph.hpp"

namespace dompack {

// Streams every graph of the given order to `yield`.  With up_to_iso one
// representative per isomorphism class is produced (order <= 8), otherwise
// every labelled graph (order <= 7).  The sequence is deterministic:
// labelled graphs by increasing triangle mask, class representatives by
// increasing canonical key.
void enumerate_graphs(int n, bool up_to_iso, const std::function<void(const Graph&)>& yield);

// Materialized isomorphism-class representatives, order <= 8.
std::vector<Graph> enumerate_iso_classes(int n);

}  // namespace dompack
