#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "commvul/errors.hpp"

namespace commvul {

/// Undirected simple graph with stable external node labels.
///
/// Labels are positive integers as published in the source data and are never
/// re-indexed; internally nodes are addressed by a dense index in ascending
/// label order. The graph is immutable after construction and safe to share
/// across threads.
class Graph {
public:
    struct LoadStats {
        int self_loops_dropped = 0;
        int duplicate_edges_dropped = 0;
    };

    /// Builds a graph from label pairs. Self-loops and duplicate edges are
    /// dropped and counted in `stats` when given. Throws DomainError on an
    /// empty edge set or non-positive labels.
    static Graph from_edges(const std::vector<std::pair<int, int>>& edges,
                            LoadStats* stats = nullptr);

    int node_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Node labels in ascending order; index i in all per-node vectors refers
    /// to labels()[i].
    const std::vector<int>& labels() const { return labels_; }

    bool has_label(int label) const;
    int index_of(int label) const;          ///< throws DomainError if unknown
    int label_at(int index) const { return labels_.at(index); }

    int degree(int label) const { return degree_at(index_of(label)); }
    int degree_at(int index) const { return static_cast<int>(adjacency_[index].size()); }

    /// Neighbor indices, sorted ascending.
    std::span<const int> neighbors_at(int index) const { return adjacency_[index]; }

    bool has_edge_at(int i, int j) const;

    /// Canonical edge list: (min label, max label) pairs, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Induced subgraph on the given labels. Labels are preserved.
    /// A member with no edge inside the subgraph is still a node of it.
    Graph induced(const std::vector<int>& member_labels) const;

    bool is_connected() const;

    /// Sum of all degrees (= 2m).
    int total_degree() const { return 2 * edge_count(); }

private:
    Graph() = default;
    std::vector<int> labels_;                       // ascending
    std::vector<std::vector<int>> adjacency_;       // by index, sorted
    std::vector<std::pair<int, int>> edges_;        // canonical label pairs
};

/// Per-node real values aligned with Graph::labels().
struct NodeScores {
    std::vector<double> by_index;

    double at(const Graph& g, int label) const { return by_index.at(g.index_of(label)); }
};

/// Headline topology statistics.
struct TopologySummary {
    int n = 0;
    int m = 0;
    double mean_degree = 0.0;
    int max_degree = 0;
    double mean_distance = 0.0;   ///< over unordered reachable pairs
    int diameter = 0;
    bool connected = true;        ///< false: distances cover reachable pairs only
};

TopologySummary topology_summary(const Graph& g);

} // namespace commvul
