#pragma once
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qboost/loss.hpp"
#include "qboost/rng.hpp"

namespace qboost {

enum class Rounding { stochastic, nearest };

// Interval lengths for B-bit gradient codes. Gradient codes use the signed
// range [-(2^(B-1)-1), 2^(B-1)-1]; hessian codes the unsigned [0, 2^B-2].
// A zero delta is the all-zero-input sentinel: every code is emitted as 0.
struct QuantScales {
    double delta_g = 0.0;
    double delta_h = 0.0;
    int bits = 0;

    int max_grad_code() const { return (1 << (bits - 1)) - 1; }
    int max_hess_code() const { return (1 << bits) - 2; }
};

struct QuantizedGradients {
    std::vector<std::int8_t> gq;
    std::vector<std::uint8_t> hq;  // empty when constant_hessian
    QuantScales scales;
    bool constant_hessian = false;
    double hessian_value = 1.0;

    std::size_t size() const { return gq.size(); }
};

// delta_g = max|g| / (2^(B-1)-1), delta_h = max h / (2^B-2) over all samples.
// Hessians are not quantized when they are constant.
QuantScales compute_scales(const GradientBuffer& grads, int bits);

// round-to-nearest, ties toward +inf
std::int64_t round_nearest(double x);

// stochastic rounding: up with probability x - floor(x), given u ~ U[0,1)
std::int64_t round_stochastic(double x, double u);

// Quantize one iteration's gradients. Stochastic draws are keyed by
// (rng seed, iteration, sample index), so the codes are independent of
// partitioning and thread count.
QuantizedGradients quantize_gradients(const GradientBuffer& grads, const QuantScales& scales,
                                      Rounding mode, const CounterRng& rng,
                                      std::uint64_t iteration);

// --------------------------- packed pairs ----------------------------------
// A packed pair is a single 2W-bit integer: signed gradient value in the upper
// W bits (two's complement), unsigned hessian value (or count) in the lower W.
// Packed addition equals per-half addition as long as neither half overflows;
// the low half never carries into the high half because hessian sums are
// bounded below 2^W by construction.

// Returns the 2W-bit pattern in the low bits of a uint64. Throws
// std::logic_error if a value does not fit its half (a bitwidth-selection bug).
std::uint64_t pack_pair(std::int64_t g_value, std::uint64_t h_value, int half_width);

// Exact inverse of pack_pair for patterns produced by packed additions.
std::pair<std::int64_t, std::uint64_t> unpack_pair(std::uint64_t packed, int half_width);

}  // namespace qboost
