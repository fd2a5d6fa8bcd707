#include "commvul/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace commvul {

using nlohmann::json;

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string fnv1a64_hex(const std::string& bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

void RunManifest::add_input(const std::string& path, const std::string& content) {
    inputs.emplace_back(path, fnv1a64_hex(content));
}

std::string format_double(double v, int precision) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (std::isnan(v))
        return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

namespace {

json manifest_json(const RunManifest& m) {
    json j;
    j["tool"] = m.tool;
    j["inputs"] = json::array();
    for (const auto& [path, hash] : m.inputs)
        j["inputs"].push_back({{"path", path}, {"fnv1a64", hash}});
    j["partition_source"] = m.partition_source;
    if (m.weights) {
        j["weights"] = {{"alpha", m.weights->alpha},
                        {"beta", m.weights->beta},
                        {"lambda", m.weights->lambda},
                        {"eta", m.weights->eta}};
    }
    if (m.plan) {
        j["sample_plan"] = {{"samples", m.plan->samples},
                            {"range", {m.plan->range_lo, m.plan->range_hi}},
                            {"seed", m.plan->seed},
                            {"estimator", m.plan->estimator},
                            {"bootstrap_resamples", m.plan->bootstrap_resamples}};
    }
    j["pair_convention"] = m.pair_convention;
    j["degree_scope"] = m.degree_scope;
    return j;
}

std::string manifest_comment_block(const RunManifest& m) {
    std::string out;
    out += "# tool: " + m.tool + "\n";
    for (const auto& [path, hash] : m.inputs)
        out += "# input: " + path + " fnv1a64:" + hash + "\n";
    out += "# partition_source: " + m.partition_source + "\n";
    if (m.weights)
        out += "# weights: " + format_double(m.weights->alpha) + " " +
               format_double(m.weights->beta) + " " + format_double(m.weights->lambda) + " " +
               format_double(m.weights->eta) + "\n";
    if (m.plan)
        out += "# sample_plan: samples=" + std::to_string(m.plan->samples) +
               " range=[" + format_double(m.plan->range_lo, 6) + "," +
               format_double(m.plan->range_hi, 6) + "] seed=" + std::to_string(m.plan->seed) +
               " estimator=" + m.plan->estimator + "\n";
    out += "# pair_convention: " + m.pair_convention + "\n";
    out += "# degree_scope: " + m.degree_scope + "\n";
    return out;
}

// Presentation follows the published tables: the |V| column repeats the
// normalized external edge count and v is its reciprocal.
double v_display(const VulnerabilityReport& rep, int x) {
    return 1.0 / rep.features.dout[x];
}

} // namespace

std::string report_csv(const VulnerabilityReport& rep, const RunManifest& manifest) {
    std::string out = manifest_comment_block(manifest);
    for (const auto& w : rep.warnings)
        out += "# warning: " + w + "\n";
    out += "community,S,T,Din,Dout,V,Vul,RV,v,R\n";
    for (int x = 0; x < rep.features.k; ++x) {
        out += std::to_string(x + 1) + "," + format_double(rep.features.s[x]) + "," +
               format_double(rep.features.t[x]) + "," + format_double(rep.features.din[x]) +
               "," + format_double(rep.features.dout[x]) + "," +
               format_double(rep.features.dout[x]) + "," + format_double(rep.vul[x]) + "," +
               format_double(rep.rv[x]) + "," + format_double(v_display(rep, x)) + "," +
               format_double(rep.classical.r[x]) + "\n";
    }
    out += "# proposed_order: " + rep.proposed_order.chain + "\n";
    out += "# classical_order: " + rep.classical_order.chain + "\n";
    return out;
}

std::string report_json(const VulnerabilityReport& rep, const RunManifest& manifest) {
    json j;
    j["manifest"] = manifest_json(manifest);
    j["weights"] = {{"alpha", rep.weights.alpha},
                    {"beta", rep.weights.beta},
                    {"lambda", rep.weights.lambda},
                    {"eta", rep.weights.eta}};
    json features;
    features["raw"] = {{"S", rep.features.s_raw},
                       {"T", rep.features.t_raw},
                       {"Din", rep.features.din_raw},
                       {"Dout", rep.features.dout_raw}};
    features["normalized"] = {{"S", rep.features.s},
                              {"T", rep.features.t},
                              {"Din", rep.features.din},
                              {"Dout", rep.features.dout}};
    j["features"] = features;
    j["vul"] = json::array();
    for (double v : rep.vul)
        j["vul"].push_back(std::isfinite(v) ? json(v) : json("unbounded"));
    j["rv"] = json::array();
    for (double v : rep.rv)
        j["rv"].push_back(std::isfinite(v) ? json(v) : json("unbounded"));
    j["classical"] = {{"v", rep.classical.v}, {"R", rep.classical.r}};
    j["proposed_order"] = rep.proposed_order.chain;
    j["classical_order"] = rep.classical_order.chain;
    j["proposed_order_ascending"] = rep.proposed_order.ascending;
    j["classical_order_ascending"] = rep.classical_order.ascending;
    j["warnings"] = rep.warnings;
    return j.dump(2) + "\n";
}

std::string report_markdown(const VulnerabilityReport& rep, const RunManifest& manifest) {
    std::string out = "| Community | S | T | Din | Dout | V | Vul | RV | v | R |\n";
    out += "|---|---|---|---|---|---|---|---|---|---|\n";
    for (int x = 0; x < rep.features.k; ++x) {
        out += "| " + std::to_string(x + 1) + " | " + format_double(rep.features.s[x]) +
               " | " + format_double(rep.features.t[x]) + " | " +
               format_double(rep.features.din[x]) + " | " +
               format_double(rep.features.dout[x]) + " | " +
               format_double(rep.features.dout[x]) + " | " + format_double(rep.vul[x]) +
               " | " + format_double(rep.rv[x]) + " | " + format_double(v_display(rep, x)) +
               " | " + format_double(rep.classical.r[x]) + " |\n";
    }
    out += "\nProposed order (ascending): " + rep.proposed_order.chain + "\n";
    out += "Classical order (ascending): " + rep.classical_order.chain + "\n";
    if (!rep.warnings.empty()) {
        out += "\nWarnings:\n";
        for (const auto& w : rep.warnings)
            out += "- " + w + "\n";
    }
    out += "\n";
    out += manifest_comment_block(manifest);
    return out;
}

std::string sobol_csv(const SobolReport& rep, const RunManifest& manifest) {
    std::string out = manifest_comment_block(manifest);
    for (const auto& w : rep.warnings)
        out += "# warning: " + w + "\n";
    out += "community,SI_alpha,ST_alpha,SI_beta,ST_beta,SI_lambda,ST_lambda,SI_eta,ST_eta\n";
    for (size_t x = 0; x < rep.communities.size(); ++x) {
        out += std::to_string(x + 1);
        for (const auto& f : rep.communities[x].factors)
            out += "," + format_double(f.si) + "," + format_double(f.st);
        out += "\n";
    }
    return out;
}

std::string sobol_json(const SobolReport& rep, const RunManifest& manifest) {
    static const char* names[4] = {"alpha", "beta", "lambda", "eta"};
    json j;
    j["manifest"] = manifest_json(manifest);
    j["communities"] = json::array();
    for (const auto& c : rep.communities) {
        json jc;
        jc["output_mean"] = c.output_mean;
        jc["output_variance"] = c.output_variance;
        jc["zero_variance"] = c.zero_variance;
        for (int f = 0; f < 4; ++f) {
            jc[names[f]] = {{"si", c.factors[f].si},
                            {"st", c.factors[f].st},
                            {"si_raw", c.factors[f].si_raw},
                            {"st_raw", c.factors[f].st_raw},
                            {"si_halfwidth", c.factors[f].si_halfwidth},
                            {"st_halfwidth", c.factors[f].st_halfwidth},
                            {"exact_zero", c.factors[f].exact_zero}};
        }
        j["communities"].push_back(jc);
    }
    j["warnings"] = rep.warnings;
    return j.dump(2) + "\n";
}

std::string trace_json(const MergeTrace& trace, double final_q, const RunManifest& manifest) {
    json j;
    j["manifest"] = manifest_json(manifest);
    j["initial_q"] = trace.initial_q;
    j["final_q"] = final_q;
    j["merges"] = json::array();
    for (const auto& m : trace.merges)
        j["merges"].push_back({{"a", m.community_a},
                               {"b", m.community_b},
                               {"delta_q", m.delta_q},
                               {"q_after", m.q_after}});
    return j.dump(2) + "\n";
}

std::string partition_file_text(const Partition& p, const RunManifest& manifest) {
    return manifest_comment_block(manifest) + partition_to_text(p);
}

ComparisonReport compare_orderings(const VulnerabilityReport& rep,
                                   const std::optional<std::vector<double>>& supplied_scores) {
    ComparisonReport out;
    out.classical = rep.classical_order;
    out.proposed = rep.proposed_order;
    if (supplied_scores) {
        if (static_cast<int>(supplied_scores->size()) != rep.features.k)
            throw DomainError("supplied score column has " +
                              std::to_string(supplied_scores->size()) + " rows, expected " +
                              std::to_string(rep.features.k));
        out.supplied = rank_report(*supplied_scores);
    }

    // Spearman rank correlation with average ranks for ties.
    auto ranks = [](const std::vector<double>& scores) {
        const int k = static_cast<int>(scores.size());
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i)
            idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return scores[a] < scores[b]; });
        std::vector<double> rank(k, 0.0);
        int i = 0;
        while (i < k) {
            int j = i;
            while (j + 1 < k && scores[idx[j + 1]] == scores[idx[i]])
                ++j;
            double avg = (i + j) / 2.0 + 1.0;
            for (int t = i; t <= j; ++t)
                rank[idx[t]] = avg;
            i = j + 1;
        }
        return rank;
    };
    std::vector<double> ra = ranks(rep.classical.r);
    std::vector<double> rb = ranks(rep.rv);
    const int k = rep.features.k;
    double ma = 0.0, mb = 0.0;
    for (int i = 0; i < k; ++i) {
        ma += ra[i];
        mb += rb[i];
    }
    ma /= k;
    mb /= k;
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (int i = 0; i < k; ++i) {
        cov += (ra[i] - ma) * (rb[i] - mb);
        va += (ra[i] - ma) * (ra[i] - ma);
        vb += (rb[i] - mb) * (rb[i] - mb);
    }
    if (va <= 0.0 || vb <= 0.0)
        out.warnings.push_back("rank correlation undefined: an ordering has no variation");
    else
        out.rank_correlation = cov / std::sqrt(va * vb);
    return out;
}

std::string comparison_csv(const ComparisonReport& rep, const RunManifest& manifest) {
    std::string out = manifest_comment_block(manifest);
    for (const auto& w : rep.warnings)
        out += "# warning: " + w + "\n";
    out += "method,ascending_order\n";
    out += "classical,\"" + rep.classical.chain + "\"\n";
    out += "proposed,\"" + rep.proposed.chain + "\"\n";
    if (rep.supplied)
        out += "supplied,\"" + rep.supplied->chain + "\"\n";
    if (rep.rank_correlation)
        out += "# spearman_classical_vs_proposed: " + format_double(*rep.rank_correlation) +
               "\n";
    return out;
}

std::string comparison_json(const ComparisonReport& rep, const RunManifest& manifest) {
    json j;
    j["manifest"] = manifest_json(manifest);
    j["classical"] = rep.classical.chain;
    j["proposed"] = rep.proposed.chain;
    if (rep.supplied)
        j["supplied"] = rep.supplied->chain;
    if (rep.rank_correlation)
        j["spearman_classical_vs_proposed"] = *rep.rank_correlation;
    j["warnings"] = rep.warnings;
    return j.dump(2) + "\n";
}

std::string comparison_markdown(const ComparisonReport& rep, const RunManifest& manifest) {
    std::string out = "| Method | Vulnerability order (ascending) |\n|---|---|\n";
    out += "| Classical | " + rep.classical.chain + " |\n";
    out += "| Proposed | " + rep.proposed.chain + " |\n";
    if (rep.supplied)
        out += "| Supplied | " + rep.supplied->chain + " |\n";
    if (rep.rank_correlation)
        out += "\nSpearman correlation (classical vs proposed, not part of the reference "
               "tables): " +
               format_double(*rep.rank_correlation) + "\n";
    for (const auto& w : rep.warnings)
        out += "\nWarning: " + w + "\n";
    out += "\n" + manifest_comment_block(manifest);
    return out;
}

} // namespace commvul
