#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commvul/community.hpp"
#include "commvul/sensitivity.hpp"
#include "commvul/vulnerability.hpp"

namespace commvul {

inline constexpr const char* kToolName = "commvul";
inline constexpr const char* kToolVersion = "1.0.0";

std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

/// Provenance stamped into every emitted file. Two runs with equal
/// manifests produce byte-identical reports.
struct RunManifest {
    std::string tool = std::string(kToolName) + " " + kToolVersion;
    std::vector<std::pair<std::string, std::string>> inputs;   ///< (path, fnv1a64)
    std::string partition_source = "detected";                 ///< "detected" | "loaded"
    std::optional<WeightVector> weights;
    std::optional<SamplePlan> plan;
    std::string pair_convention = "unordered";
    std::string degree_scope = "intra";

    void add_input(const std::string& path, const std::string& content);
};

/// Fixed-precision float used in all text output, so report bytes do not
/// depend on locale or platform formatting quirks.
std::string format_double(double v, int precision = 4);

/// Table columns follow the published layout:
/// S, T, Din, Dout, |V|, Vul, RV, v, R with |V| the normalized external
/// edge count and v its reciprocal.
std::string report_csv(const VulnerabilityReport& rep, const RunManifest& manifest);
std::string report_json(const VulnerabilityReport& rep, const RunManifest& manifest);
std::string report_markdown(const VulnerabilityReport& rep, const RunManifest& manifest);

std::string sobol_csv(const SobolReport& rep, const RunManifest& manifest);
std::string sobol_json(const SobolReport& rep, const RunManifest& manifest);

std::string trace_json(const MergeTrace& trace, double final_q, const RunManifest& manifest);
std::string partition_file_text(const Partition& p, const RunManifest& manifest);

/// Side-by-side ordering comparison. `supplied` is an optional externally
/// provided score column (displayed and ranked, never recomputed).
struct ComparisonReport {
    OrderingChain classical;
    OrderingChain proposed;
    std::optional<OrderingChain> supplied;
    std::optional<double> rank_correlation;   ///< Spearman, classical vs proposed
    std::vector<std::string> warnings;
};

ComparisonReport compare_orderings(const VulnerabilityReport& rep,
                                   const std::optional<std::vector<double>>& supplied_scores);

std::string comparison_csv(const ComparisonReport& rep, const RunManifest& manifest);
std::string comparison_json(const ComparisonReport& rep, const RunManifest& manifest);
std::string comparison_markdown(const ComparisonReport& rep, const RunManifest& manifest);

} // namespace commvul
