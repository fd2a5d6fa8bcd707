#include "commvul/centrality.hpp"

#include <queue>
#include <stack>

namespace commvul {

NodeScores degree_distribution(const Graph& g) {
    if (g.edge_count() == 0)
        throw DomainError("degree distribution of a graph without edges");
    NodeScores scores;
    scores.by_index.resize(g.node_count());
    const double total = g.total_degree();
    for (int i = 0; i < g.node_count(); ++i)
        scores.by_index[i] = g.degree_at(i) / total;
    return scores;
}

NodeScores betweenness(const Graph& g, PairConvention convention) {
    const int n = g.node_count();
    NodeScores scores;
    scores.by_index.assign(n, 0.0);

    // Brandes: one BFS per source with dependency accumulation.
    std::vector<double> sigma(n), delta(n);
    std::vector<int> dist(n);
    std::vector<std::vector<int>> preds(n);
    std::vector<int> order;
    order.reserve(n);

    for (int s = 0; s < n; ++s) {
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        std::fill(dist.begin(), dist.end(), -1);
        for (auto& p : preds)
            p.clear();
        order.clear();

        sigma[s] = 1.0;
        dist[s] = 0;
        std::queue<int> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            order.push_back(u);
            for (int v : g.neighbors_at(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    frontier.push(v);
                }
                if (dist[v] == dist[u] + 1) {
                    sigma[v] += sigma[u];
                    preds[v].push_back(u);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            for (int v : preds[w])
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s)
                scores.by_index[w] += delta[w];
        }
    }

    // The sweep visits each unordered {s, e} from both endpoints.
    if (convention == PairConvention::Unordered)
        for (double& v : scores.by_index)
            v *= 0.5;
    return scores;
}

} // namespace commvul
