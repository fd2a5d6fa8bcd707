#pragma once

#include <map>
#include <string>
#include <vector>

#include "commvul/graph.hpp"

namespace commvul {

/// Assignment of every graph node to exactly one community.
///
/// Community numbering is canonical: communities are ordered by their
/// smallest member label and numbered 1..k, independent of input order.
class Partition {
public:
    /// `assignment` maps node label to an arbitrary community id; ids are
    /// re-canonicalized. Every graph node must appear exactly once.
    static Partition from_assignment(const Graph& g, const std::map<int, int>& assignment);

    /// Convenience: build from explicit member lists.
    static Partition from_members(const Graph& g, const std::vector<std::vector<int>>& members);

    int community_count() const { return static_cast<int>(members_.size()); }

    /// 1-based community index of a node.
    int community_of(const Graph& g, int label) const { return by_index_.at(g.index_of(label)); }
    int community_of_index(int node_index) const { return by_index_.at(node_index); }

    /// Member labels of community c (1-based), sorted ascending.
    const std::vector<int>& members(int community) const { return members_.at(community - 1); }
    const std::vector<std::vector<int>>& all_members() const { return members_; }

private:
    std::vector<int> by_index_;                 // node index -> community 1..k
    std::vector<std::vector<int>> members_;     // canonical order
};

/// One greedy merge step.
struct MergeRecord {
    int community_a = 0;     ///< canonical id: smallest member label
    int community_b = 0;
    double delta_q = 0.0;
    double q_after = 0.0;
};

struct MergeTrace {
    double initial_q = 0.0;  ///< modularity of the all-singletons partition
    std::vector<MergeRecord> merges;
};

/// Newman modularity Q of a partition.
double modularity(const Graph& g, const Partition& p);

/// Total degree of a node set (degrees taken in the whole graph).
int community_degree(const Graph& g, const std::vector<int>& member_labels);

struct DetectionResult {
    Partition partition;
    MergeTrace trace;
    double q = 0.0;
};

/// Greedy agglomerative modularity maximization.
///
/// Starts from singleton communities and repeatedly merges the connected
/// pair with the largest modularity gain, stopping when the best gain is
/// negative (zero-gain merges are taken). Ties are broken deterministically:
/// smallest combined size first, then smallest community ids. The result is
/// independent of edge input order.
DetectionResult detect_communities(const Graph& g);

/// Parses "community: label label ..." lines (commas optional). A community
/// id may span several lines. The partition must cover the graph exactly;
/// duplicated or missing nodes are reported with their labels.
Partition load_partition(const std::string& text, const Graph& g);

/// Partition in the same text format load_partition accepts.
std::string partition_to_text(const Partition& p);

} // namespace commvul
