#include "commvul/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace commvul {

namespace {

// Uniform double in [0, 1) from the engine's specified bit stream, so
// draws are identical across standard library implementations.
double next_unit(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Pairwise summation tree keyed by index; deterministic and well
// conditioned regardless of the caller's evaluation order.
double pairwise_sum(const double* data, size_t count) {
    if (count == 0)
        return 0.0;
    if (count <= 8) {
        double s = 0.0;
        for (size_t i = 0; i < count; ++i)
            s += data[i];
        return s;
    }
    size_t half = count / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, count - half);
}

double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

// Multiplicative single-community model on log features.
struct Model {
    std::array<double, 4> log_f;   // ln S, ln Dout, ln Din, ln T
    std::array<bool, 4> active;    // feature != 1

    static Model from_row(const std::array<double, 4>& row) {
        Model m;
        for (int i = 0; i < 4; ++i) {
            m.active[i] = row[i] != 1.0;
            m.log_f[i] = std::log(row[i]);
        }
        return m;
    }

    double eval(const std::array<double, 4>& w) const {
        // Vul = S^a / (Dout^b * Din^l * T^e)
        double log_y = w[0] * log_f[0] - w[1] * log_f[1] - w[2] * log_f[2] - w[3] * log_f[3];
        return std::exp(log_y);
    }
};

struct EstimatorInputs {
    std::vector<double> y_a, y_b;
    std::array<std::vector<double>, 4> y_ab;
};

struct IndexEstimates {
    std::array<double, 4> si{}, st{};
    double mean = 0.0, variance = 0.0;
    bool zero_variance = false;
};

// Estimates over a row subset (identity for the point estimate, resampled
// rows for the bootstrap).
IndexEstimates estimate(const EstimatorInputs& in, const std::array<bool, 4>& active,
                        const std::vector<int>& rows, const std::string& estimator) {
    const size_t n = rows.size();
    IndexEstimates out;

    std::vector<double> pooled(2 * n);
    for (size_t i = 0; i < n; ++i) {
        pooled[i] = in.y_a[rows[i]];
        pooled[n + i] = in.y_b[rows[i]];
    }
    out.mean = pairwise_sum(pooled) / (2.0 * n);
    std::vector<double> sq(2 * n);
    for (size_t i = 0; i < 2 * n; ++i) {
        double d = pooled[i] - out.mean;
        sq[i] = d * d;
    }
    out.variance = pairwise_sum(sq) / (2.0 * n - 1);
    if (out.variance <= 0.0) {
        out.zero_variance = true;
        return out;
    }

    std::vector<double> work(n);
    for (int f = 0; f < 4; ++f) {
        if (!active[f])
            continue;
        const auto& y_i = in.y_ab[f];
        if (estimator == "saltelli") {
            // First order: (1/N) sum y_B (y_ABi - y_A); total: Homma form.
            for (size_t r = 0; r < n; ++r)
                work[r] = in.y_b[rows[r]] * (y_i[rows[r]] - in.y_a[rows[r]]);
            out.si[f] = pairwise_sum(work) / n / out.variance;
            for (size_t r = 0; r < n; ++r)
                work[r] = in.y_a[rows[r]] * y_i[rows[r]];
            double cross = pairwise_sum(work) / n;
            out.st[f] = (out.variance - (cross - out.mean * out.mean)) / out.variance;
        } else {
            // Jansen forms.
            for (size_t r = 0; r < n; ++r) {
                double d = in.y_b[rows[r]] - y_i[rows[r]];
                work[r] = d * d;
            }
            out.si[f] = (out.variance - pairwise_sum(work) / (2.0 * n)) / out.variance;
            for (size_t r = 0; r < n; ++r) {
                double d = in.y_a[rows[r]] - y_i[rows[r]];
                work[r] = d * d;
            }
            out.st[f] = pairwise_sum(work) / (2.0 * n) / out.variance;
        }
    }
    return out;
}

double percentile_halfwidth(std::vector<double>& values) {
    if (values.empty())
        return 0.0;
    std::sort(values.begin(), values.end());
    auto at = [&](double p) {
        double pos = p * (values.size() - 1);
        size_t lo = static_cast<size_t>(pos);
        size_t hi = std::min(lo + 1, values.size() - 1);
        double frac = pos - lo;
        return values[lo] * (1.0 - frac) + values[hi] * frac;
    };
    return (at(0.975) - at(0.025)) / 2.0;
}

SobolCommunity analyze_row(const std::array<double, 4>& row, const SampleSet& set,
                           const SamplePlan& plan) {
    Model model = Model::from_row(row);
    SobolCommunity out;
    for (int f = 0; f < 4; ++f)
        out.factors[f].exact_zero = !model.active[f];

    const int n = set.n;
    EstimatorInputs in;
    in.y_a.resize(n);
    in.y_b.resize(n);
    for (int f = 0; f < 4; ++f)
        if (model.active[f])
            in.y_ab[f].resize(n);
    for (int r = 0; r < n; ++r) {
        in.y_a[r] = model.eval(set.a[r]);
        in.y_b[r] = model.eval(set.b[r]);
        for (int f = 0; f < 4; ++f)
            if (model.active[f])
                in.y_ab[f][r] = model.eval(set.ab(r, f));
    }

    std::vector<int> identity(n);
    for (int r = 0; r < n; ++r)
        identity[r] = r;
    IndexEstimates point = estimate(in, model.active, identity, plan.estimator);
    out.output_mean = point.mean;
    out.output_variance = point.variance;
    if (point.zero_variance) {
        out.zero_variance = true;
        return out;
    }

    // Bootstrap over design rows; the same resample drives every factor.
    std::array<std::vector<double>, 4> si_samples, st_samples;
    std::mt19937_64 boot(plan.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<int> rows(n);
    for (int rep = 0; rep < plan.bootstrap_resamples; ++rep) {
        for (int r = 0; r < n; ++r)
            rows[r] = static_cast<int>(next_unit(boot) * n);
        IndexEstimates e = estimate(in, model.active, rows, plan.estimator);
        if (e.zero_variance)
            continue;
        for (int f = 0; f < 4; ++f) {
            if (!model.active[f])
                continue;
            si_samples[f].push_back(e.si[f]);
            st_samples[f].push_back(e.st[f]);
        }
    }

    for (int f = 0; f < 4; ++f) {
        auto& fac = out.factors[f];
        if (!model.active[f])
            continue;   // exact zeros stay zero
        fac.si_raw = point.si[f];
        fac.st_raw = point.st[f];
        fac.si_halfwidth = percentile_halfwidth(si_samples[f]);
        fac.st_halfwidth = percentile_halfwidth(st_samples[f]);
        double si_eps = 3.0 * fac.si_halfwidth;
        double st_eps = 3.0 * fac.st_halfwidth;
        fac.si = std::clamp(fac.si_raw, -si_eps, 1.0 + si_eps);
        fac.st = std::clamp(fac.st_raw, -st_eps, 1.0 + st_eps);
    }
    return out;
}

} // namespace

void SamplePlan::validate() const {
    if (samples < 64)
        throw DomainError("sample count must be at least 64");
    if (range_lo <= 0.0)
        throw DomainError("weight range must be positive");
    if (!(range_lo < range_hi))
        throw DegenerateError("degenerate weight range [" + std::to_string(range_lo) +
                              ", " + std::to_string(range_hi) + "]");
    if (estimator != "jansen" && estimator != "saltelli")
        throw DomainError("unknown estimator '" + estimator + "'");
    if (bootstrap_resamples < 0)
        throw DomainError("bootstrap resample count must be nonnegative");
}

SampleSet sample_weights(const SamplePlan& plan) {
    plan.validate();
    SampleSet set;
    set.n = plan.samples;
    set.a.resize(plan.samples);
    set.b.resize(plan.samples);
    std::mt19937_64 eng(plan.seed);
    const double span = plan.range_hi - plan.range_lo;
    for (int r = 0; r < plan.samples; ++r) {
        for (int f = 0; f < 4; ++f)
            set.a[r][f] = plan.range_lo + span * next_unit(eng);
        for (int f = 0; f < 4; ++f)
            set.b[r][f] = plan.range_lo + span * next_unit(eng);
    }
    return set;
}

SobolReport sobol_indices(const CommunityFeatures& features, const SamplePlan& plan) {
    plan.validate();
    SobolReport rep;
    rep.plan = plan;
    SampleSet set = sample_weights(plan);
    for (int x = 0; x < features.k; ++x) {
        std::array<double, 4> row{features.s[x], features.dout[x], features.din[x],
                                  features.t[x]};
        for (double f : row)
            if (f <= 0.0)
                throw DomainError("community " + std::to_string(x + 1) +
                                  " has a non-positive normalized feature");
        SobolCommunity community = analyze_row(row, set, plan);
        if (community.zero_variance)
            rep.warnings.push_back("community " + std::to_string(x + 1) +
                                   ": all features equal 1, output variance is zero");
        rep.communities.push_back(std::move(community));
    }
    return rep;
}

AnalyticCheck analytic_variance_check(const std::array<double, 4>& row,
                                      const SamplePlan& plan) {
    plan.validate();
    AnalyticCheck check;
    for (int f = 0; f < 4; ++f) {
        if (row[f] == 1.0)
            continue;
        if (row[f] <= 0.0 || row[f] >= 1.0)
            throw DomainError("features must lie in (0, 1]");
        if (check.active_factor >= 0)
            throw DomainError("exactly one feature may differ from 1");
        check.active_factor = f;
    }
    if (check.active_factor < 0)
        throw DomainError("exactly one feature must differ from 1");

    check.exact_si[check.active_factor] = 1.0;
    check.exact_st[check.active_factor] = 1.0;

    SampleSet set = sample_weights(plan);
    SobolCommunity c = analyze_row(row, set, plan);
    for (int f = 0; f < 4; ++f) {
        check.estimated_si[f] = c.factors[f].si;
        check.estimated_st[f] = c.factors[f].st;
        check.max_abs_error = std::max({check.max_abs_error,
                                        std::abs(check.estimated_si[f] - check.exact_si[f]),
                                        std::abs(check.estimated_st[f] - check.exact_st[f])});
    }
    return check;
}

} // namespace commvul
