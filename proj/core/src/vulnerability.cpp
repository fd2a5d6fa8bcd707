#include "commvul/vulnerability.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace commvul {

int internal_edges(const Graph& g, const std::vector<int>& member_labels) {
    std::set<int> members(member_labels.begin(), member_labels.end());
    int count = 0;
    for (auto [u, v] : g.edges())
        if (members.count(u) && members.count(v))
            ++count;
    return count;
}

int external_edges(const Graph& g, const std::vector<int>& member_labels) {
    std::set<int> members(member_labels.begin(), member_labels.end());
    int count = 0;
    for (auto [u, v] : g.edges())
        if (members.count(u) != members.count(v))
            ++count;
    return count;
}

namespace {

std::vector<double> max_normalized(const std::vector<double>& raw, const char* column) {
    double mx = 0.0;
    for (double v : raw)
        mx = std::max(mx, v);
    if (mx <= 0.0)
        throw DegenerateError(std::string("feature column '") + column +
                              "' has maximum 0; network is degenerate");
    std::vector<double> out(raw.size());
    for (size_t i = 0; i < raw.size(); ++i)
        out[i] = raw[i] / mx;
    return out;
}

} // namespace

CommunityFeatures assemble_features(const Graph& g, const Partition& p,
                                    const SimilarityMatrix& sim,
                                    const std::vector<double>& t_raw) {
    const int k = p.community_count();
    if (k < 2)
        throw DomainError("feature assembly needs at least two communities");
    if (sim.k != k || static_cast<int>(t_raw.size()) != k)
        throw DomainError("similarity matrix / complexity vector do not match the partition");

    CommunityFeatures f;
    f.k = k;
    f.s_raw = sim.row_divergence;
    f.t_raw = t_raw;
    for (const auto& members : p.all_members()) {
        f.din_raw.push_back(internal_edges(g, members));
        f.dout_raw.push_back(external_edges(g, members));
    }

    std::vector<double> din(f.din_raw.begin(), f.din_raw.end());
    std::vector<double> dout(f.dout_raw.begin(), f.dout_raw.end());
    f.s = max_normalized(f.s_raw, "S");
    f.t = max_normalized(f.t_raw, "T");
    f.din = max_normalized(din, "Din");
    f.dout = max_normalized(dout, "Dout");
    return f;
}

ClassicalScores classical_vulnerability(const std::vector<int>& external_counts) {
    ClassicalScores out;
    for (size_t i = 0; i < external_counts.size(); ++i) {
        if (external_counts[i] <= 0)
            throw DomainError("community " + std::to_string(i + 1) +
                              " has no external links; classical vulnerability undefined");
        out.v.push_back(1.0 / external_counts[i]);
    }
    double v_min = *std::min_element(out.v.begin(), out.v.end());
    for (double v : out.v)
        out.r.push_back(v / v_min);
    return out;
}

OrderingChain rank_report(const std::vector<double>& scores) {
    OrderingChain chain;
    const int k = static_cast<int>(scores.size());
    chain.ascending.resize(k);
    for (int i = 0; i < k; ++i)
        chain.ascending[i] = i + 1;
    std::stable_sort(chain.ascending.begin(), chain.ascending.end(),
                     [&](int a, int b) {
                         if (scores[a - 1] != scores[b - 1])
                             return scores[a - 1] < scores[b - 1];
                         return a < b;
                     });

    auto tied = [&](double a, double b) {
        return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
    };
    for (int i = 0; i < k; ++i) {
        int c = chain.ascending[i];
        if (!chain.groups.empty() &&
            tied(scores[chain.groups.back().back() - 1], scores[c - 1])) {
            chain.groups.back().push_back(c);
            chain.has_ties = true;
        } else {
            chain.groups.push_back({c});
        }
    }
    for (size_t gi = 0; gi < chain.groups.size(); ++gi) {
        if (gi)
            chain.chain += " < ";
        for (size_t j = 0; j < chain.groups[gi].size(); ++j) {
            if (j)
                chain.chain += " = ";
            chain.chain += std::to_string(chain.groups[gi][j]);
        }
    }
    return chain;
}

VulnerabilityReport proposed_vulnerability(const CommunityFeatures& f, const WeightVector& w) {
    if (w.alpha < 0 || w.beta < 0 || w.lambda < 0 || w.eta < 0)
        throw DomainError("weight factors must be nonnegative");

    VulnerabilityReport rep;
    rep.features = f;
    rep.weights = w;

    const double inf = std::numeric_limits<double>::infinity();
    for (int x = 0; x < f.k; ++x) {
        bool unbounded = (f.dout[x] == 0.0 && w.beta > 0) ||
                         (f.din[x] == 0.0 && w.lambda > 0) ||
                         (f.t[x] == 0.0 && w.eta > 0);
        if (unbounded) {
            rep.vul.push_back(inf);
            rep.warnings.push_back("community " + std::to_string(x + 1) +
                                   ": zero denominator factor; treated as unbounded "
                                   "(most vulnerable)");
            continue;
        }
        if (f.s[x] == 0.0 && w.alpha > 0) {
            rep.vul.push_back(0.0);
            rep.warnings.push_back("community " + std::to_string(x + 1) +
                                   ": zero similarity factor; score 0 (least vulnerable)");
            continue;
        }
        double numer = std::pow(f.s[x], w.alpha);
        double denom = std::pow(f.dout[x], w.beta) * std::pow(f.din[x], w.lambda) *
                       std::pow(f.t[x], w.eta);
        rep.vul.push_back(numer / denom);
    }

    double vul_min = inf;
    for (double v : rep.vul)
        if (v > 0.0 && std::isfinite(v))
            vul_min = std::min(vul_min, v);
    if (!std::isfinite(vul_min))
        throw DegenerateError("no community has a finite positive vulnerability");
    for (double v : rep.vul)
        rep.rv.push_back(v / vul_min);

    rep.classical = classical_vulnerability(f.dout_raw);
    rep.proposed_order = rank_report(rep.rv);
    rep.classical_order = rank_report(rep.classical.r);
    if (rep.proposed_order.has_ties)
        rep.warnings.push_back("proposed ordering contains ties (broken by ascending index)");
    return rep;
}

VulnerabilityReport analyze(const Graph& g, const Partition& p, const WeightVector& w,
                            DegreeScope scope, PairConvention convention) {
    SimilarityMatrix sim = similarity_matrix(g, p, scope);
    std::vector<double> t_raw;
    t_raw.reserve(p.community_count());
    for (const auto& members : p.all_members())
        t_raw.push_back(community_complexity(g, members, convention));
    CommunityFeatures f = assemble_features(g, p, sim, t_raw);
    return proposed_vulnerability(f, w);
}

} // namespace commvul
