#pragma once
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qboost/loss.hpp"

namespace qboost {

// Weak-learnability statistic of one executed split, recorded during training
// together with the leaf's average hessian.
struct LeafTheoryRecord {
    int iteration = 0;
    int leaf = 0;
    std::uint32_t n_s = 0;
    std::uint32_t n_s1 = 0;
    std::uint32_t n_s2 = 0;
    double gamma_hat = 0.0;
    double mean_hessian = 0.0;
};

// gamma_hat = (|G_s1| + |G_s2|) / (2 * sum |g_i|); one half minus the weighted
// error rate of the sign-majority stump for the split. nullopt when the leaf
// carries no gradient mass.
std::optional<double> gamma_hat(double g_sum_left, double g_sum_right, double sum_abs_g);

LeafTheoryRecord make_leaf_record(int iteration, int leaf, const GradientBuffer& grads,
                                  std::span<const std::uint32_t> left_rows,
                                  std::span<const std::uint32_t> right_rows);

// Inputs of the closed-form split-gain error bounds.
struct BoundInputs {
    double max_abs_g = 0.0;
    double epsilon = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    int bits = 0;
    std::uint64_t n_s = 0;
    std::uint64_t n_s1 = 0;
    std::uint64_t n_s2 = 0;
    // additional terms for the non-constant-hessian bound
    double delta_g = 0.0;
    double delta_h = 0.0;
    double mean_h_s = 0.0;
    double mean_h_s1 = 0.0;
    double mean_h_s2 = 0.0;
};

// Constant-hessian bound:
//   max|g| sqrt(2 ln(4/d)) / (g^2 e 2^(B-1)) * (1/sqrt(n1) + 1/sqrt(n2))
//   + max|g|^2 ln(4/d) / (g^2 e^2 n 4^(B-2))
double bound_constant_hessian(const BoundInputs& in);

// Three-term non-constant-hessian bound; nullopt when the sample-size
// conditions n_si >= 8 delta_h^2 ln(8/d) / mean_h_si^2 fail.
std::optional<double> bound_nonconstant_hessian(const BoundInputs& in);

// A single leaf with constant hessian and binned features, used to exercise
// the probabilistic bound empirically over stochastic-rounding draws.
struct LeafFixture {
    std::vector<double> gradients;
    double hessian_value = 1.0;
    struct Feature {
        std::vector<std::uint16_t> bins;  // bin index per row
        int num_bins = 0;
    };
    std::vector<Feature> features;
};

struct BoundCheckResult {
    int bits = 0;
    double delta = 0.0;
    int trials = 0;
    int violations = 0;
    double bound = 0.0;
    double max_observed = 0.0;
    double gamma = 0.0;       // measured gamma_hat of the tested split
    double epsilon = 0.0;
    double g_star = 0.0;      // gain value of the optimal split
    std::vector<double> errors;  // per-trial relative gain errors

    double violation_fraction() const {
        return trials == 0 ? 0.0 : static_cast<double>(violations) / trials;
    }
};

// Monte-Carlo check of the probabilistic bound: quantizes the fixture's
// gradients with independent stochastic-rounding streams, measures the
// relative gain error of the optimal split against the exact full-precision
// gain, and counts trials exceeding the closed-form bound. epsilon defaults
// to half the mean absolute gradient and must stay below the mean.
BoundCheckResult empirical_bound_check(const LeafFixture& fixture, int bits, double delta,
                                       int trials, std::uint64_t seed,
                                       std::optional<double> epsilon = std::nullopt);

std::string gamma_records_csv(std::span<const LeafTheoryRecord> records);
std::string bound_checks_csv(std::span<const BoundCheckResult> results);

}  // namespace qboost
