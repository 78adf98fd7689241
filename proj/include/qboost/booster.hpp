#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qboost/dataset.hpp"
#include "qboost/loss.hpp"
#include "qboost/theory.hpp"
#include "qboost/tree.hpp"

namespace qboost {

struct TrainConfig {
    Objective objective = Objective::squared_error;
    int num_iterations = 500;
    double learning_rate = 0.1;
    int num_leaves = 255;
    int max_bin = 255;
    int grad_bits = 3;  // 0 runs the full-precision pipeline
    Rounding rounding = Rounding::stochastic;
    bool refit = true;
    std::uint32_t min_data_in_leaf = 20;
    double min_child_weight = 100.0;
    int num_partitions = 1;
    std::uint64_t seed = 0;
    int threads = 1;
    bool use_subtraction = true;
    bool record_theory = false;

    void validate() const;  // throws ConfigError
};

struct IterationLog {
    int iteration = 0;
    double train_metric = 0.0;
    std::optional<double> valid_metric;
    // wall times are kept out of the serialized model so identical runs
    // produce identical bytes; they feed the separate metrics report
    double hist_seconds = 0.0;
    double total_seconds = 0.0;
};

struct Model {
    int version = kModelFormatVersion;
    Objective objective = Objective::squared_error;
    double init_score = 0.0;
    double learning_rate = 0.1;
    std::vector<std::vector<double>> bin_upper_bounds;
    std::vector<Tree> trees;
    std::vector<IterationLog> log;
    std::vector<LeafTheoryRecord> theory_records;
    int best_iteration = -1;
    double best_metric = 0.0;
};

// The full boosting loop: gradients at the cached scores, scales, quantized
// codes, leaf-wise tree growth, optional leaf refitting, prediction update,
// and per-iteration metric logging. grad_bits = 0 runs the identical loop on
// full-precision gradients.
Model train(const BinnedDataset& data, const TrainConfig& config,
            const RawDataset* valid = nullptr, const TrainHooks* hooks = nullptr);

// Raw margins; pass probability=true for sigmoid outputs under logloss.
std::vector<double> predict(const Model& model, const RawDataset& data,
                            bool probability = false);
double predict_one(const Model& model, std::span<const double> features,
                   bool probability = false);

// Canonical JSON serialization; save -> load -> save is byte-identical.
void save_model(const Model& model, const std::string& path);
Model load_model(const std::string& path);
std::string model_to_json(const Model& model);
Model model_from_json(const std::string& text);

}  // namespace qboost
