#pragma once

#include "commvul/graph.hpp"

namespace commvul {

/// Pair convention for betweenness sums. Unordered counts each {s, e} pair
/// once; Ordered counts (s, e) and (e, s) separately, doubling every value.
enum class PairConvention { Unordered, Ordered };

/// Degree mass per node: p_i = d_i / (2m). Entries sum to 1.
/// Throws DomainError on an empty edge set.
NodeScores degree_distribution(const Graph& g);

/// Shortest-path betweenness: for node i the sum over node pairs {s, e},
/// s != e != i, of the fraction of shortest s-e paths passing through i.
/// Computed by Brandes' accumulation over single-source shortest-path DAGs.
/// On a disconnected graph pairs in different components contribute zero.
NodeScores betweenness(const Graph& g,
                       PairConvention convention = PairConvention::Unordered);

} // namespace commvul
