#pragma once

#include "commvul/community.hpp"
#include "commvul/graph.hpp"

namespace commvul {

/// The 9-node reference network: cliques of sizes 2, 3 and 4 joined by
/// four bridge edges (two between the 2-clique and the 4-clique, two
/// between the 3-clique and the 4-clique). The bridge attachment is the
/// canonical symmetric one; the clique partition has Q = 2/7.
Graph reconstruct_example9();

/// The clique partition of reconstruct_example9().
Partition example9_partition(const Graph& g);

/// Synthetic 5-community benchmark graph: cliques of sizes 3..7 joined by
/// a varying number of bridge edges, giving distinct feature values in
/// every column. Used by the sensitivity property suite.
Graph synthetic_five_communities();

Partition synthetic_five_partition(const Graph& g);

} // namespace commvul
