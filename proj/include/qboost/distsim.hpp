#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qboost/booster.hpp"

namespace qboost {

// Byte accounting for simulated data-distributed training. Every directly
// built total histogram is one ring-allreduce over the workers' local integer
// histograms; each worker sends 2(K-1)/K times the buffer size, so the bytes
// summed over workers are 2(K-1) * payload. The fp32/fp64 fields are analytic
// baselines for the same reduction schedule with float-pair bins.
struct CommStats {
    struct IterationComm {
        int iteration = 0;
        std::uint64_t reductions = 0;
        std::uint64_t bytes = 0;
    };
    int workers = 1;
    std::vector<IterationComm> per_iteration;
    std::uint64_t total_reductions = 0;
    std::uint64_t total_bytes = 0;
    std::uint64_t payload_bytes = 0;        // actual bin payload, no ring factor
    std::uint64_t payload_bytes_fp32 = 0;   // 2 x 4-byte bins over the same schedule
    std::uint64_t payload_bytes_fp64 = 0;   // 2 x 8-byte bins over the same schedule
};

// Row-distributed training across K virtual workers with exact integer
// histogram reduction. The model is bit-identical to train() with
// num_partitions = K. Throws ConfigError when workers exceed the row count.
std::pair<Model, CommStats> train_distributed_sim(const BinnedDataset& data,
                                                  const TrainConfig& config, int workers,
                                                  const RawDataset* valid = nullptr);

// CSV: iteration,reductions,bytes,cumulative_bytes
std::string comm_report(const CommStats& stats);

}  // namespace qboost
