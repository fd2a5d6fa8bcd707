#include "commvul/fixtures.hpp"

namespace commvul {

Graph reconstruct_example9() {
    // Cliques {1,2}, {3,4,5}, {6,7,8,9}; bridges 1-6, 2-7 and 3-8, 4-9.
    std::vector<std::pair<int, int>> edges = {
        {1, 2},
        {3, 4}, {3, 5}, {4, 5},
        {6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9},
        {1, 6}, {2, 7},
        {3, 8}, {4, 9},
    };
    return Graph::from_edges(edges);
}

Partition example9_partition(const Graph& g) {
    return Partition::from_members(g, {{1, 2}, {3, 4, 5}, {6, 7, 8, 9}});
}

Graph synthetic_five_communities() {
    std::vector<std::pair<int, int>> edges;
    auto clique = [&](int first, int last) {
        for (int u = first; u <= last; ++u)
            for (int v = u + 1; v <= last; ++v)
                edges.emplace_back(u, v);
    };
    clique(1, 3);     // K3
    clique(4, 7);     // K4
    clique(8, 12);    // K5
    clique(13, 18);   // K6
    clique(19, 25);   // K7
    edges.emplace_back(1, 4);
    edges.emplace_back(4, 8);
    edges.emplace_back(5, 9);
    edges.emplace_back(8, 13);
    edges.emplace_back(13, 19);
    edges.emplace_back(14, 20);
    edges.emplace_back(15, 21);
    edges.emplace_back(19, 1);
    return Graph::from_edges(edges);
}

Partition synthetic_five_partition(const Graph& g) {
    return Partition::from_members(g, {{1, 2, 3},
                                       {4, 5, 6, 7},
                                       {8, 9, 10, 11, 12},
                                       {13, 14, 15, 16, 17, 18},
                                       {19, 20, 21, 22, 23, 24, 25}});
}

} // namespace commvul
