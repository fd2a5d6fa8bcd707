#include "commvul/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace commvul {

Graph Graph::from_edges(const std::vector<std::pair<int, int>>& raw, LoadStats* stats) {
    LoadStats local;
    std::set<std::pair<int, int>> unique;
    std::set<int> labels;
    for (auto [u, v] : raw) {
        if (u <= 0 || v <= 0)
            throw DomainError("node labels must be positive integers, got (" +
                              std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v) {
            ++local.self_loops_dropped;
            labels.insert(u);
            continue;
        }
        auto e = std::minmax(u, v);
        if (!unique.insert({e.first, e.second}).second)
            ++local.duplicate_edges_dropped;
        labels.insert(u);
        labels.insert(v);
    }
    if (unique.empty())
        throw DomainError("empty edge set");

    Graph g;
    g.labels_.assign(labels.begin(), labels.end());
    g.edges_.assign(unique.begin(), unique.end());
    g.adjacency_.resize(g.labels_.size());
    for (auto [u, v] : g.edges_) {
        int i = g.index_of(u);
        int j = g.index_of(v);
        g.adjacency_[i].push_back(j);
        g.adjacency_[j].push_back(i);
    }
    for (auto& nbrs : g.adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
    if (stats)
        *stats = local;
    return g;
}

bool Graph::has_label(int label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

int Graph::index_of(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        throw DomainError("unknown node label " + std::to_string(label));
    return static_cast<int>(it - labels_.begin());
}

bool Graph::has_edge_at(int i, int j) const {
    const auto& nbrs = adjacency_.at(i);
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

Graph Graph::induced(const std::vector<int>& member_labels) const {
    std::set<int> members;
    for (int label : member_labels) {
        index_of(label);   // validates
        members.insert(label);
    }
    if (members.empty())
        throw DomainError("induced subgraph of an empty member set");

    Graph g;
    g.labels_.assign(members.begin(), members.end());
    g.adjacency_.resize(g.labels_.size());
    for (auto [u, v] : edges_) {
        if (members.count(u) && members.count(v)) {
            g.edges_.emplace_back(u, v);
            int i = g.index_of(u);
            int j = g.index_of(v);
            g.adjacency_[i].push_back(j);
            g.adjacency_[j].push_back(i);
        }
    }
    for (auto& nbrs : g.adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::is_connected() const {
    if (labels_.empty())
        return true;
    std::vector<char> seen(labels_.size(), 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int v : adjacency_[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                frontier.push(v);
            }
        }
    }
    return reached == node_count();
}

TopologySummary topology_summary(const Graph& g) {
    TopologySummary s;
    s.n = g.node_count();
    s.m = g.edge_count();
    s.mean_degree = s.n > 0 ? static_cast<double>(g.total_degree()) / s.n : 0.0;
    for (int i = 0; i < s.n; ++i)
        s.max_degree = std::max(s.max_degree, g.degree_at(i));

    // BFS from every node; unordered pairs counted once.
    long long dist_sum = 0;
    long long pair_count = 0;
    for (int src = 0; src < s.n; ++src) {
        std::vector<int> dist(s.n, -1);
        std::queue<int> frontier;
        dist[src] = 0;
        frontier.push(src);
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (int v : g.neighbors_at(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    frontier.push(v);
                }
            }
        }
        for (int v = src + 1; v < s.n; ++v) {
            if (dist[v] > 0) {
                dist_sum += dist[v];
                ++pair_count;
                s.diameter = std::max(s.diameter, dist[v]);
            }
        }
    }
    s.connected = g.is_connected();
    long long all_pairs = static_cast<long long>(s.n) * (s.n - 1) / 2;
    s.mean_distance = pair_count > 0 ? static_cast<double>(dist_sum) / pair_count : 0.0;
    (void)all_pairs;
    return s;
}

} // namespace commvul
