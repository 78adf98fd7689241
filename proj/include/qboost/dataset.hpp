#pragma once
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qboost/common.hpp"

namespace qboost {

// Dense row-major feature matrix plus labels, prior to binning.
struct RawDataset {
    std::size_t num_rows = 0;
    std::size_t num_features = 0;
    std::vector<double> features;  // row-major, num_rows * num_features
    std::vector<double> labels;

    double at(std::size_t row, std::size_t col) const {
        return features[row * num_features + col];
    }
    std::span<const double> row(std::size_t i) const {
        return {features.data() + i * num_features, num_features};
    }
};

// Feature values discretized to per-feature bin indices. Bin j of feature f
// covers (upper_bounds[f][j-1], upper_bounds[f][j]], with an implicit -inf
// lower bound for bin 0; the last upper bound is always +inf.
struct BinnedDataset {
    std::size_t num_rows = 0;
    std::size_t num_features = 0;
    std::vector<std::uint8_t> bins;                        // row-major
    std::vector<std::vector<double>> bin_upper_bounds;     // per feature
    std::vector<std::uint32_t> feature_offsets;            // prefix sums, size J+1
    std::vector<double> labels;

    std::uint8_t bin(std::size_t row, std::size_t col) const {
        return bins[row * num_features + col];
    }
    int num_bins(std::size_t feature) const {
        return static_cast<int>(bin_upper_bounds[feature].size());
    }
    std::uint32_t total_bins() const { return feature_offsets[num_features]; }
};

// CSV with a configurable label column; optional header line; empty or
// "nan" cells become the missing sentinel. Throws ParseError with the
// offending line/column on malformed input.
RawDataset load_csv(const std::string& path, int label_column = 0);

// LibSVM text format: "label idx:val ..." with 1-based strictly ascending
// indices. Absent indices become the missing sentinel.
RawDataset load_libsvm(const std::string& path);

// Exact quantile binning: boundaries chosen from the sorted column so bins
// receive approximately equal row counts; features with at most max_bin
// distinct values get one bin per value with midpoint boundaries.
BinnedDataset bin_dataset(const RawDataset& raw, int max_bin, int threads = 1);

// Binary-search bin lookup consistent with bin_dataset; missing maps to 0.
int locate_bin(std::span<const double> upper_bounds, double value);

}  // namespace qboost
