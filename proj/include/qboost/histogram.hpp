#pragma once
#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "qboost/dataset.hpp"
#include "qboost/quantize.hpp"

namespace qboost {

enum class HalfWidth : int { w8 = 8, w16 = 16, w32 = 32 };

inline int half_width_bits(HalfWidth w) { return static_cast<int>(w); }
inline int bin_payload_bytes(HalfWidth w) { return 2 * static_cast<int>(w) / 8; }

// Accumulation bitwidths for one leaf build: local histograms at the smallest
// width that cannot overflow within a single row partition, merged into a
// total histogram wide enough for the whole dataset.
struct HistogramSpec {
    HalfWidth local = HalfWidth::w32;
    HalfWidth total = HalfWidth::w32;
    int num_partitions = 1;
    int bits = 0;
    bool constant_hessian = false;
};

// Worst case assumes every row of a partition lands in one bin: the signed
// gradient half must hold rows*(2^(B-1)-1) and the unsigned hessian half
// rows*(2^B-2), or the plain row count when hessians are constant.
HistogramSpec select_bitwidth(std::uint64_t max_rows_per_partition, std::uint64_t total_rows,
                              int bits, bool constant_hessian, int num_partitions = 1);

// Contiguous near-equal row ranges, fixed up front so partition membership
// never depends on thread scheduling.
struct Partitioning {
    std::uint64_t num_rows = 0;
    int count = 1;

    static Partitioning contiguous(std::uint64_t num_rows, int k) {
        return Partitioning{num_rows, k < 1 ? 1 : k};
    }
    std::uint32_t begin(int p) const {
        return static_cast<std::uint32_t>(num_rows * static_cast<std::uint64_t>(p) / count);
    }
    std::uint32_t end(int p) const { return begin(p + 1); }
    std::uint64_t max_partition_rows() const {
        std::uint64_t m = 0;
        for (int p = 0; p < count; ++p) m = std::max<std::uint64_t>(m, end(p) - begin(p));
        return m;
    }
};

// Per-feature bin arrays of packed (gradient, hessian) integer pairs in a flat
// layout. When hessians are constant the hessian half carries row counts;
// otherwise a separate per-bin count array backs the row-count constraints.
struct PackedHistogram {
    HalfWidth half_width = HalfWidth::w32;
    bool constant_hessian = false;
    std::vector<std::uint32_t> feature_offsets;  // size J+1
    std::variant<std::vector<std::uint16_t>, std::vector<std::uint32_t>,
                 std::vector<std::uint64_t>>
        bins;
    std::vector<std::uint32_t> counts;  // empty when constant_hessian
    std::uint64_t row_count = 0;

    std::size_t num_features() const { return feature_offsets.size() - 1; }
    std::uint32_t total_bins() const { return feature_offsets.back(); }
    // unpacked (gradient sum, hessian sum or count) of one bin
    std::pair<std::int64_t, std::uint64_t> bin_value(std::size_t feature, int bin) const;
    std::uint32_t bin_rows(std::size_t feature, int bin) const;
};

// Scatter-adds the packed codes of the given rows (all from one partition).
PackedHistogram build_local_histogram(const BinnedDataset& data, const QuantizedGradients& grads,
                                      std::span<const std::uint32_t> rows, HalfWidth local_width);

// Widens every local bin to total_width and sums; exact regardless of order.
PackedHistogram merge_histograms(std::span<const PackedHistogram> locals, HalfWidth total_width);

// parent - child, bit-exact sibling of child; both at the same half-width.
PackedHistogram subtract_histogram(const PackedHistogram& parent, const PackedHistogram& child);

// ------------------------- full-precision baseline --------------------------
// Double-pair bins for the unquantized path and for timing comparisons.
struct FpHistogram {
    bool constant_hessian = false;
    std::vector<std::uint32_t> feature_offsets;
    std::vector<double> grad;
    std::vector<double> hess;  // counts * 1.0 when constant_hessian
    std::vector<std::uint32_t> counts;  // empty when constant_hessian
    std::uint64_t row_count = 0;

    std::size_t num_features() const { return feature_offsets.size() - 1; }
    std::uint32_t total_bins() const { return feature_offsets.back(); }
    std::uint32_t bin_rows(std::size_t feature, int bin) const;
};

FpHistogram build_fp_histogram(const BinnedDataset& data, const GradientBuffer& grads,
                               std::span<const std::uint32_t> rows);

FpHistogram merge_fp_histograms(std::span<const FpHistogram> locals);

}  // namespace qboost
