#pragma once
#include <string>
#include <vector>

#include "qboost/booster.hpp"

namespace qboost {

struct DataOptions {
    std::string data_path;
    std::string valid_path;
    int label_column = 0;
    std::string format = "auto";  // auto | csv | libsvm
};

struct RunConfig {
    TrainConfig train;
    DataOptions data;
};

// One `key = value` per line, `#` comments, blank lines ignored. Unknown keys
// and out-of-range values throw ConfigError naming the key.
RunConfig parse_config_file(const std::string& path);

// Applies a single key; shared by the file parser and CLI overrides.
void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value);

// Loads CSV or LibSVM according to options (auto picks by .csv extension).
RawDataset load_raw_dataset(const std::string& path, const DataOptions& options);

}  // namespace qboost
