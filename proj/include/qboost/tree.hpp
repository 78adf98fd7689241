#pragma once
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qboost/histogram.hpp"

namespace qboost {

struct SplitConstraints {
    std::uint32_t min_data_in_leaf = 1;
    double min_child_weight = 0.0;
};

// Integer leaf statistics: gradient-code sum, hessian-code sum (or row count
// when hessians are constant), and the row count.
struct LeafStatsInt {
    std::int64_t g = 0;
    std::int64_t h = 0;
    std::uint32_t n = 0;
};

struct LeafStatsFp {
    double g = 0.0;
    double h = 0.0;
    std::uint32_t n = 0;
};

// Converts integer statistics back to the real scale for gains and values.
struct GainContext {
    bool constant_hessian = false;
    double hessian_value = 1.0;
    double delta_g = 0.0;
    double delta_h = 0.0;

    double real_g(const LeafStatsInt& s) const { return static_cast<double>(s.g) * delta_g; }
    double real_h(const LeafStatsInt& s) const {
        return constant_hessian ? static_cast<double>(s.h) * hessian_value
                                : static_cast<double>(s.h) * delta_h;
    }
    static GainContext from(const QuantizedGradients& q) {
        return GainContext{q.constant_hessian, q.hessian_value, q.scales.delta_g,
                           q.scales.delta_h};
    }
};

template <typename Stats>
struct BasicSplit {
    int feature = -1;
    int threshold_bin = -1;
    double gain = 0.0;
    Stats left{};
    Stats right{};

    bool valid() const { return feature >= 0; }
};

using SplitInfo = BasicSplit<LeafStatsInt>;
using SplitInfoFp = BasicSplit<LeafStatsFp>;

// Enumerates every (feature, threshold bin) by a prefix scan over histogram
// bins and returns the largest-gain candidate that satisfies the constraints,
// or an invalid split when none qualifies. Ties break toward the lowest
// feature index, then the lowest bin.
SplitInfo find_best_split(const PackedHistogram& hist, const LeafStatsInt& leaf_stats,
                          const GainContext& ctx, const SplitConstraints& constraints);

SplitInfoFp find_best_split(const FpHistogram& hist, const LeafStatsFp& leaf_stats,
                            const SplitConstraints& constraints);

// ------------------------------- tree model ---------------------------------

// Child links: index >= 0 is a node, index < 0 is leaf ~index.
struct Tree {
    struct Node {
        int feature = -1;
        double threshold = 0.0;
        int threshold_bin = -1;
        int left = 0;
        int right = 0;
    };
    std::vector<Node> nodes;
    std::vector<double> leaf_values;
    int root = ~0;  // single leaf by default

    std::size_t num_leaves() const { return leaf_values.size(); }
};

// Grown tree plus the training rows that reached each leaf (by leaf slot);
// needed for refitting and incremental prediction updates.
struct GrownTree {
    Tree tree;
    std::vector<std::vector<std::uint32_t>> leaf_rows;
};

struct GrowConfig {
    int num_leaves = 2;
    SplitConstraints constraints{};
    bool use_subtraction = true;
    int threads = 1;
    int iteration = 0;  // forwarded to hooks
};

// One integer-histogram reduction (a simulated allreduce in the distributed
// sense); fires once per directly built total histogram.
struct ReductionEvent {
    int iteration = 0;
    std::uint64_t total_bins = 0;
    int bin_payload_bytes = 0;
};

struct SplitEvent {
    int iteration = 0;
    int leaf_id = 0;  // creation order of the split leaf
    double gain = 0.0;
    std::span<const std::uint32_t> left_rows;
    std::span<const std::uint32_t> right_rows;
};

struct TrainHooks {
    std::function<void(const ReductionEvent&)> on_reduction;
    std::function<void(const SplitEvent&)> on_split;
    std::function<void(int iteration, const PackedHistogram& hist,
                       std::span<const std::uint32_t> rows)>
        on_leaf_histogram;
};

// Leaf-wise growth from quantized gradients: repeatedly splits the live leaf
// with the largest positive gain until num_leaves is reached or no candidate
// qualifies. Leaf values are -(G~ * delta_g) / (H~ * delta_h), with the
// hessian sum replaced by count * h for constant-hessian losses.
GrownTree grow_tree(const BinnedDataset& data, const QuantizedGradients& grads,
                    const Partitioning& parts, const GrowConfig& config,
                    const TrainHooks* hooks = nullptr);

// Same growth on full-precision gradients (the unquantized baseline arm).
GrownTree grow_tree_fp(const BinnedDataset& data, const GradientBuffer& grads,
                       const Partitioning& parts, const GrowConfig& config,
                       const TrainHooks* hooks = nullptr);

// Replaces every leaf value with -G_s/H_s from the original gradients in a
// single pass; leaves with zero hessian mass get value 0.
void refit_leaf_values(GrownTree& grown, const GradientBuffer& original);

// Routes by (value <= threshold -> left); missing values route left.
double predict_row(const Tree& tree, std::span<const double> features);

}  // namespace qboost
