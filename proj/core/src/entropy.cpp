#include "commvul/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace commvul {

QIndex q_index(const NodeScores& betw) {
    if (betw.by_index.empty())
        throw DomainError("q index of empty betweenness scores");
    QIndex qi;
    qi.betweenness_max = *std::max_element(betw.by_index.begin(), betw.by_index.end());
    qi.q.reserve(betw.by_index.size());
    for (double b : betw.by_index) {
        if (b < 0.0)
            throw DomainError("betweenness scores must be nonnegative");
        qi.q.push_back(1.0 + (qi.betweenness_max - b));
    }
    return qi;
}

double tsallis_entropy(std::span<const double> p, std::span<const double> q,
                       int* zero_mass_terms) {
    if (p.size() != q.size())
        throw DomainError("tsallis_entropy needs aligned p and q");
    int zeros = 0;
    double total = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        const double pi = p[i];
        const double qi = q[i];
        if (pi <= 0.0) {
            ++zeros;           // limit of both branches is 0
            continue;
        }
        if (std::abs(1.0 - qi) < 1e-9)
            total += -pi * std::log(pi);
        else
            total += (std::pow(pi, qi) - pi) / (1.0 - qi);
    }
    if (zero_mass_terms)
        *zero_mass_terms = zeros;
    return total;
}

double community_complexity(const Graph& g, const std::vector<int>& member_labels,
                            PairConvention convention) {
    Graph sub = g.induced(member_labels);
    if (sub.edge_count() == 0) {
        if (sub.node_count() == 1)
            return 0.0;        // single node: no structure
        throw DomainError("community has no internal edges; complexity undefined");
    }
    NodeScores p = degree_distribution(sub);
    QIndex qi = q_index(betweenness(sub, convention));
    return tsallis_entropy(p.by_index, qi.q);
}

CommunityProfile community_profile(const Graph& g, const std::vector<int>& member_labels,
                                   int padded_size, DegreeScope scope) {
    if (member_labels.empty())
        throw DomainError("community profile of an empty member set");
    if (padded_size < static_cast<int>(member_labels.size()))
        throw DomainError("profile size " + std::to_string(padded_size) +
                          " is smaller than the community (" +
                          std::to_string(member_labels.size()) + " members)");

    std::vector<int> degrees;
    degrees.reserve(member_labels.size());
    if (scope == DegreeScope::Full) {
        for (int label : member_labels)
            degrees.push_back(g.degree(label));
    } else {
        Graph sub = g.induced(member_labels);
        for (int label : member_labels)
            degrees.push_back(sub.degree(label));
    }
    long long total = 0;
    for (int d : degrees)
        total += d;
    if (total == 0)
        throw DomainError("all member degrees are zero; profile cannot be normalized");

    CommunityProfile prof;
    prof.member_count = static_cast<int>(member_labels.size());
    prof.entries.reserve(padded_size);
    for (int d : degrees)
        prof.entries.push_back(static_cast<double>(d) / total);
    prof.entries.resize(padded_size, 0.0);
    prof.sorted_desc = prof.entries;
    std::sort(prof.sorted_desc.begin(), prof.sorted_desc.end(), std::greater<>());
    return prof;
}

double relative_entropy(const CommunityProfile& a, const CommunityProfile& b) {
    const int truncated = std::min(a.member_count, b.member_count);
    double total = 0.0;
    for (int k = 0; k < truncated; ++k) {
        const double pa = a.sorted_desc[k];
        const double pb = b.sorted_desc[k];
        if (pa <= 0.0 || pb <= 0.0)
            throw DomainError("zero entry inside the truncated profile range "
                              "(zero-degree member upstream)");
        total += pa * std::log(pa / pb);
    }
    return total;
}

SimilarityMatrix similarity_matrix(const Graph& g, const Partition& p, DegreeScope scope) {
    const int k = p.community_count();
    if (k < 2)
        throw DomainError("similarity needs at least two communities");

    int max_size = 0;
    for (const auto& m : p.all_members())
        max_size = std::max(max_size, static_cast<int>(m.size()));

    std::vector<CommunityProfile> profiles;
    profiles.reserve(k);
    for (const auto& m : p.all_members())
        profiles.push_back(community_profile(g, m, max_size, scope));

    SimilarityMatrix sim;
    sim.k = k;
    sim.divergence.assign(static_cast<size_t>(k) * k, 0.0);
    sim.similarity.assign(static_cast<size_t>(k) * k, 0.0);
    sim.row_divergence.assign(k, 0.0);

    double r_min = 0.0, r_max = 0.0;
    bool first = true;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            double r = relative_entropy(profiles[i], profiles[j]) +
                       relative_entropy(profiles[j], profiles[i]);
            sim.divergence[i * k + j] = r;
            sim.divergence[j * k + i] = r;
            if (first || r < r_min)
                r_min = r;
            if (first || r > r_max)
                r_max = r;
            first = false;
        }
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j)
                sim.row_divergence[i] += sim.divergence[i * k + j];

    sim.degenerate = (r_max - r_min) <= 1e-12 * std::max(1.0, std::abs(r_max));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j)
                continue;
            sim.similarity[i * k + j] =
                sim.degenerate ? 1.0 : 1.0 - sim.divergence[i * k + j] / r_max;
        }
    }
    return sim;
}

} // namespace commvul
