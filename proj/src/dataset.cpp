#include "qboost/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>

namespace qboost {

namespace {

bool parse_double(std::string_view token, double& out) {
    // trim surrounding whitespace
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
        token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
        token.remove_suffix(1);
    if (token.empty()) return false;
    std::string buf(token);
    char* end = nullptr;
    out = std::strtod(buf.c_str(), &end);
    return end == buf.c_str() + buf.size();
}

bool is_missing_token(std::string_view token) {
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
        token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
        token.remove_suffix(1);
    if (token.empty()) return true;
    std::string lower(token);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return lower == "nan" || lower == "na";
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return cells;
}

void strip_trailing_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

RawDataset load_csv(const std::string& path, int label_column) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);

    RawDataset out;
    std::string line;
    std::size_t line_no = 0;
    std::size_t num_columns = 0;
    bool first_data_line = true;

    while (std::getline(in, line)) {
        ++line_no;
        strip_trailing_cr(line);
        if (line.empty()) continue;
        auto cells = split_csv_line(line);

        if (first_data_line) {
            // header heuristic: any cell that is neither numeric nor missing
            bool header = false;
            for (const auto& cell : cells) {
                double v;
                if (!is_missing_token(cell) && !parse_double(cell, v)) {
                    header = true;
                    break;
                }
            }
            num_columns = cells.size();
            if (label_column < 0 || static_cast<std::size_t>(label_column) >= num_columns)
                throw ParseError(path + ": label column " + std::to_string(label_column) +
                                 " out of range for " + std::to_string(num_columns) + " columns");
            if (num_columns < 2)
                throw ParseError(path + ": need at least one feature column besides the label");
            first_data_line = false;
            if (header) continue;
        }

        if (cells.size() != num_columns)
            throw ParseError(path + ": line " + std::to_string(line_no) + ": expected " +
                             std::to_string(num_columns) + " columns, got " +
                             std::to_string(cells.size()));

        for (std::size_t c = 0; c < cells.size(); ++c) {
            const bool is_label = static_cast<int>(c) == label_column;
            double v;
            if (is_missing_token(cells[c])) {
                if (is_label)
                    throw ParseError(path + ": line " + std::to_string(line_no) + ", column " +
                                     std::to_string(c + 1) + ": missing label");
                out.features.push_back(kMissing);
                continue;
            }
            if (!parse_double(cells[c], v))
                throw ParseError(path + ": line " + std::to_string(line_no) + ", column " +
                                 std::to_string(c + 1) + ": cannot parse '" +
                                 std::string(cells[c]) + "' as a number");
            if (std::isnan(v) || std::isinf(v))
                throw ParseError(path + ": line " + std::to_string(line_no) + ", column " +
                                 std::to_string(c + 1) + ": non-finite value");
            if (is_label)
                out.labels.push_back(v);
            else
                out.features.push_back(v);
        }
        ++out.num_rows;
    }

    if (out.num_rows == 0) throw ParseError(path + ": no data rows");
    out.num_features = num_columns - 1;
    return out;
}

RawDataset load_libsvm(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);

    struct SparseRow {
        double label;
        std::vector<std::pair<int, double>> entries;
    };
    std::vector<SparseRow> rows;
    int max_index = 0;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        strip_trailing_cr(line);
        if (line.empty()) continue;

        std::istringstream ls(line);
        std::string token;
        if (!(ls >> token))
            continue;

        SparseRow row;
        if (!parse_double(token, row.label))
            throw ParseError(path + ": line " + std::to_string(line_no) +
                             ": cannot parse label '" + token + "'");

        int prev_index = 0;
        while (ls >> token) {
            const std::size_t colon = token.find(':');
            if (colon == std::string::npos || colon == 0 || colon == token.size() - 1)
                throw ParseError(path + ": line " + std::to_string(line_no) +
                                 ": malformed feature:value pair '" + token + "'");
            int index = 0;
            const auto [ptr, ec] =
                std::from_chars(token.data(), token.data() + colon, index);
            if (ec != std::errc{} || ptr != token.data() + colon || index < 1)
                throw ParseError(path + ": line " + std::to_string(line_no) +
                                 ": bad feature index in '" + token + "'");
            if (index <= prev_index)
                throw ParseError(path + ": line " + std::to_string(line_no) +
                                 ": feature indices not strictly ascending at '" + token + "'");
            double value;
            if (!parse_double(token.substr(colon + 1), value) || std::isnan(value) ||
                std::isinf(value))
                throw ParseError(path + ": line " + std::to_string(line_no) +
                                 ": bad feature value in '" + token + "'");
            row.entries.emplace_back(index, value);
            prev_index = index;
        }
        max_index = std::max(max_index, prev_index);
        rows.push_back(std::move(row));
    }

    if (rows.empty()) throw ParseError(path + ": no data rows");
    if (max_index == 0) throw ParseError(path + ": no feature indices in the whole file");

    RawDataset out;
    out.num_rows = rows.size();
    out.num_features = static_cast<std::size_t>(max_index);
    out.features.assign(out.num_rows * out.num_features, kMissing);
    out.labels.reserve(out.num_rows);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.labels.push_back(rows[i].label);
        for (const auto& [index, value] : rows[i].entries)
            out.features[i * out.num_features + (index - 1)] = value;
    }
    return out;
}

namespace {

// Boundaries for one feature column; the +inf sentinel is always last.
std::vector<double> compute_boundaries(std::vector<double> values, int max_bin) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();

    std::vector<double> bounds;
    if (n == 0) {
        bounds.push_back(std::numeric_limits<double>::infinity());
        return bounds;
    }

    std::size_t distinct = 1;
    for (std::size_t i = 1; i < n; ++i)
        if (values[i] != values[i - 1]) ++distinct;

    if (distinct <= static_cast<std::size_t>(max_bin)) {
        // one bin per distinct value, boundaries at midpoints
        for (std::size_t i = 1; i < n; ++i)
            if (values[i] != values[i - 1])
                bounds.push_back(values[i - 1] / 2.0 + values[i] / 2.0);
    } else {
        // equal-count cuts, never splitting a run of identical values
        for (int k = 1; k < max_bin; ++k) {
            std::size_t pos = n * static_cast<std::size_t>(k) / max_bin;
            while (pos < n && values[pos] == values[pos - 1]) ++pos;
            if (pos >= n) break;
            const double boundary = values[pos - 1] / 2.0 + values[pos] / 2.0;
            if (bounds.empty() || boundary > bounds.back()) bounds.push_back(boundary);
        }
    }
    bounds.push_back(std::numeric_limits<double>::infinity());
    return bounds;
}

}  // namespace

int locate_bin(std::span<const double> upper_bounds, double value) {
    if (std::isnan(value)) return 0;
    // first boundary >= value
    const auto it = std::lower_bound(upper_bounds.begin(), upper_bounds.end(), value);
    return static_cast<int>(it - upper_bounds.begin());
}

BinnedDataset bin_dataset(const RawDataset& raw, int max_bin, int threads) {
    if (max_bin < 2 || max_bin > 255)
        throw ConfigError("max_bin must be in [2, 255], got " + std::to_string(max_bin));
    if (raw.num_rows == 0 || raw.num_features == 0)
        throw ConfigError("cannot bin an empty dataset");

    BinnedDataset out;
    out.num_rows = raw.num_rows;
    out.num_features = raw.num_features;
    out.labels = raw.labels;
    out.bin_upper_bounds.resize(raw.num_features);

    auto bin_feature = [&](std::size_t j) {
        std::vector<double> column(raw.num_rows);
        for (std::size_t i = 0; i < raw.num_rows; ++i) column[i] = raw.at(i, j);
        out.bin_upper_bounds[j] = compute_boundaries(std::move(column), max_bin);
    };

    if (threads > 1 && raw.num_features > 1) {
        std::vector<std::future<void>> futures;
        futures.reserve(raw.num_features);
        for (std::size_t j = 0; j < raw.num_features; ++j)
            futures.push_back(std::async(std::launch::async, bin_feature, j));
        for (auto& f : futures) f.get();
    } else {
        for (std::size_t j = 0; j < raw.num_features; ++j) bin_feature(j);
    }

    out.feature_offsets.resize(raw.num_features + 1);
    out.feature_offsets[0] = 0;
    for (std::size_t j = 0; j < raw.num_features; ++j)
        out.feature_offsets[j + 1] =
            out.feature_offsets[j] + static_cast<std::uint32_t>(out.bin_upper_bounds[j].size());

    out.bins.resize(raw.num_rows * raw.num_features);
    for (std::size_t i = 0; i < raw.num_rows; ++i)
        for (std::size_t j = 0; j < raw.num_features; ++j)
            out.bins[i * raw.num_features + j] =
                static_cast<std::uint8_t>(locate_bin(out.bin_upper_bounds[j], raw.at(i, j)));

    return out;
}

}  // namespace qboost
