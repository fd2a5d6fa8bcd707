#pragma once

#include <limits>
#include <string>
#include <vector>

#include "commvul/entropy.hpp"

namespace commvul {

/// Exponents of the vulnerability measure. All four are non-negative;
/// zeros switch individual factors off.
struct WeightVector {
    double alpha = 1.0;    ///< external similarity S
    double beta = 1.0;     ///< external edges D_out
    double lambda = 1.0;   ///< internal edges D_in
    double eta = 1.0;      ///< complexity T
};

/// Edges with both endpoints in the member set.
int internal_edges(const Graph& g, const std::vector<int>& member_labels);

/// Edges with exactly one endpoint in the member set.
int external_edges(const Graph& g, const std::vector<int>& member_labels);

/// Raw and max-normalized per-community factors.
struct CommunityFeatures {
    int k = 0;
    std::vector<double> s_raw;     ///< row divergence sums
    std::vector<double> t_raw;     ///< community complexity
    std::vector<int> din_raw;      ///< internal edge counts
    std::vector<int> dout_raw;     ///< external edge counts
    std::vector<double> s, t, din, dout;   ///< each column divided by its max
};

/// Normalizes the four factor columns by their maxima. Throws
/// DegenerateError naming the column when a maximum is zero.
CommunityFeatures assemble_features(const Graph& g, const Partition& p,
                                    const SimilarityMatrix& sim,
                                    const std::vector<double>& t_raw);

/// Classical link-count vulnerability: v_x = 1 / (external edge count),
/// R_x = v_x / min_y v_y. Throws DomainError if some community has no
/// external edge.
struct ClassicalScores {
    std::vector<double> v;    ///< from raw counts
    std::vector<double> r;    ///< scale-free, >= 1
};

ClassicalScores classical_vulnerability(const std::vector<int>& external_counts);

/// Ascending ordering with tie groups rendered as "a = b < c".
struct OrderingChain {
    std::vector<int> ascending;            ///< community ids, least score first
    std::vector<std::vector<int>> groups;  ///< tie groups, ascending score
    std::string chain;
    bool has_ties = false;
};

OrderingChain rank_report(const std::vector<double>& scores);

struct VulnerabilityReport {
    CommunityFeatures features;
    WeightVector weights;
    std::vector<double> vul;     ///< +inf marks an unbounded sentinel
    std::vector<double> rv;      ///< vul / min finite positive vul
    ClassicalScores classical;
    OrderingChain proposed_order;    ///< ascending RV
    OrderingChain classical_order;   ///< ascending R
    std::vector<std::string> warnings;
};

/// Vul_x = S^alpha / (Dout^beta * Din^lambda * T^eta) on the normalized
/// features. A zero denominator factor with a positive exponent makes the
/// community an unbounded sentinel ranked most vulnerable; S = 0 with
/// alpha > 0 yields Vul = 0 ranked least vulnerable. Both are flagged.
VulnerabilityReport proposed_vulnerability(const CommunityFeatures& features,
                                           const WeightVector& w);

/// End-to-end: features + classical + proposed for a partitioned graph.
VulnerabilityReport analyze(const Graph& g, const Partition& p, const WeightVector& w,
                            DegreeScope scope = DegreeScope::Intra,
                            PairConvention convention = PairConvention::Unordered);

} // namespace commvul
