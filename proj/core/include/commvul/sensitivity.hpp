#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "commvul/vulnerability.hpp"

namespace commvul {

/// Monte-Carlo design for the weight-factor sensitivity analysis.
struct SamplePlan {
    int samples = 10000;             ///< base sample count N (>= 64)
    double range_lo = 0.2;           ///< > 0
    double range_hi = 5.0;
    std::uint64_t seed = 0;
    std::string estimator = "jansen";   ///< "jansen" | "saltelli"
    int bootstrap_resamples = 200;

    void validate() const;           ///< throws DomainError / DegenerateError
};

/// Paired sample matrices: A and B are independent N x 4 uniform draws,
/// fully determined by the seed. ab(i) is A with column i taken from B.
struct SampleSet {
    int n = 0;
    std::vector<std::array<double, 4>> a;
    std::vector<std::array<double, 4>> b;

    std::array<double, 4> ab(int row, int column) const {
        auto r = a[row];
        r[column] = b[row][column];
        return r;
    }
};

SampleSet sample_weights(const SamplePlan& plan);

struct SobolFactor {
    double si = 0.0;               ///< first-order index, clamped
    double st = 0.0;               ///< total-effect index, clamped
    double si_raw = 0.0;           ///< estimator output before clamping
    double st_raw = 0.0;
    double si_halfwidth = 0.0;     ///< bootstrap 95% half-width
    double st_halfwidth = 0.0;
    bool exact_zero = false;       ///< feature equals 1: factor cannot act
};

struct SobolCommunity {
    std::array<SobolFactor, 4> factors;   ///< alpha, beta, lambda, eta
    double output_mean = 0.0;
    double output_variance = 0.0;
    bool zero_variance = false;
};

struct SobolReport {
    SamplePlan plan;
    std::vector<SobolCommunity> communities;
    std::vector<std::string> warnings;
};

/// Variance-based first-order and total-effect indices of Vul_x with
/// respect to the four weight exponents, per community.
///
/// Factors whose normalized feature equals exactly 1 are short-circuited
/// to SI = ST = 0 (the factor cannot move the output). Estimation uses the
/// paired-matrix scheme; "jansen" applies the Jansen forms for both
/// indices, "saltelli" the 2010 first-order form with the Homma total
/// effect. Reductions are pairwise sums in row order, so reports are
/// bit-identical for equal inputs.
SobolReport sobol_indices(const CommunityFeatures& features, const SamplePlan& plan);

/// Validation record for the estimator on a single-factor model: exactly
/// one normalized feature lies in (0,1), so that factor has SI = ST = 1
/// and the others 0, up to Monte-Carlo error.
struct AnalyticCheck {
    int active_factor = -1;
    std::array<double, 4> exact_si{};
    std::array<double, 4> exact_st{};
    std::array<double, 4> estimated_si{};
    std::array<double, 4> estimated_st{};
    double max_abs_error = 0.0;
};

/// `row` holds the four normalized features (S, Dout, Din, T). Throws
/// DomainError unless exactly one entry lies strictly between 0 and 1 and
/// the rest equal 1.
AnalyticCheck analytic_variance_check(const std::array<double, 4>& row,
                                      const SamplePlan& plan);

} // namespace commvul
