#pragma once

#include <span>
#include <vector>

#include "commvul/centrality.hpp"
#include "commvul/community.hpp"
#include "commvul/graph.hpp"

namespace commvul {

/// Which degree a community-level computation uses for its members:
/// the degree inside the community subgraph (default) or the full-network
/// degree. Intra is the calibrated convention for both the complexity
/// measure and the similarity profiles; Full is available for study.
enum class DegreeScope { Intra, Full };

/// Per-node Tsallis deformation parameters derived from betweenness:
/// q_i = 1 + (b_max - b_i), so q_i >= 1 with equality at the argmax.
struct QIndex {
    std::vector<double> q;       ///< aligned with the scores it was built from
    double betweenness_max = 0.0;
};

/// Throws DomainError on empty input or negative scores.
QIndex q_index(const NodeScores& betw);

/// Tsallis entropy sum over paired (p_i, q_i) values:
///   sum_i (p_i^{q_i} - p_i) / (1 - q_i),
/// with each |1 - q_i| < 1e-9 term replaced by its Shannon limit -p ln p.
/// Terms with p_i = 0 contribute 0 (continuity); *zero_mass_terms counts
/// them when given.
double tsallis_entropy(std::span<const double> p, std::span<const double> q,
                       int* zero_mass_terms = nullptr);

/// Community complexity: Tsallis structure entropy of the community's
/// induced subgraph. p is the subgraph degree distribution and q is driven
/// by subgraph betweenness via q_index, so a clique community (uniform
/// degrees, zero betweenness) degenerates to the Shannon entropy ln|c|.
double community_complexity(const Graph& g, const std::vector<int>& member_labels,
                            PairConvention convention = PairConvention::Unordered);

/// Degree-mass vector of a community, zero-padded to a common length.
struct CommunityProfile {
    std::vector<double> entries;       ///< member-label order, then padding
    std::vector<double> sorted_desc;   ///< same values, non-increasing
    int member_count = 0;              ///< entries beyond this are exactly 0
};

/// First |members| entries are d_k / sum(d_k) over member degrees in the
/// chosen scope, padded with zeros to padded_size. Throws DomainError if
/// padded_size < |members|, members is empty, or all degrees are zero.
CommunityProfile community_profile(const Graph& g, const std::vector<int>& member_labels,
                                   int padded_size, DegreeScope scope = DegreeScope::Intra);

/// Truncated relative entropy between two sorted profiles:
///   sum_{k < s'} a_k ln(a_k / b_k),  s' = min(member counts).
/// Truncation keeps every term finite; a non-positive entry inside the
/// truncated range throws DomainError (it indicates a zero-degree member).
double relative_entropy(const CommunityProfile& a, const CommunityProfile& b);

/// Pairwise community divergence and similarity.
///
/// divergence r_ij symmetrizes the truncated relative entropy both ways;
/// similarity s_ij = 1 - r_ij / max(r) with the degenerate rule that all
/// off-diagonal s are 1 when every off-diagonal r is equal (this covers
/// k = 2, where a single pair would otherwise always score 0).
/// row_divergence[x] = sum_j r_xj is the external-similarity feature the
/// vulnerability measure consumes.
struct SimilarityMatrix {
    int k = 0;
    std::vector<double> divergence;        ///< k*k, symmetric, zero diagonal
    std::vector<double> similarity;        ///< k*k, symmetric, zero diagonal
    std::vector<double> row_divergence;    ///< length k
    bool degenerate = false;

    double r(int i, int j) const { return divergence[i * k + j]; }
    double s(int i, int j) const { return similarity[i * k + j]; }
};

/// Throws DomainError when the partition has fewer than two communities.
SimilarityMatrix similarity_matrix(const Graph& g, const Partition& p,
                                   DegreeScope scope = DegreeScope::Intra);

} // namespace commvul
