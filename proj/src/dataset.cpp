#include "rssl/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "rssl/errors.hpp"

namespace rssl {

std::string task_name(Task task) {
    return task == Task::kRegression ? "regression" : "classification";
}

Task parse_task(const std::string& name) {
    if (name == "regression") {
        return Task::kRegression;
    }
    if (name == "classification") {
        return Task::kClassification;
    }
    throw ConfigError("unknown task '" + name + "' (expected regression|classification)");
}

void validate(const Dataset& ds) {
    const Eigen::Index n = ds.features.rows();
    const Eigen::Index p = ds.features.cols();
    if (n < 1 || p < 1) {
        throw DataError("dataset must have at least one row and one feature");
    }
    if (ds.target.size() != n) {
        throw DataError("target length does not match feature row count");
    }
    if (static_cast<Eigen::Index>(ds.feature_names.size()) != p) {
        throw DataError("feature name count does not match feature column count");
    }
    if (!ds.features.allFinite()) {
        throw DataError("non-finite feature cell");
    }
    if (ds.task == Task::kRegression) {
        if (!ds.target.allFinite()) {
            throw DataError("non-finite regression target");
        }
    } else {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (ds.target[i] != 0.0 && ds.target[i] != 1.0) {
                throw DataError("classification targets must be 0 or 1");
            }
        }
    }
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
    const std::string t = trim(s);
    if (t.empty()) {
        return false;
    }
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (*first == '+') {
        ++first;  // from_chars rejects a leading plus
    }
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last;
}

}  // namespace

Dataset load_csv(const std::string& path, const std::string& target_name, Task task) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line) || trim(line).empty()) {
        throw DataError("empty file '" + path + "'");
    }
    const std::vector<std::string> header = split_line(line);
    Eigen::Index target_col = -1;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (trim(header[j]) == target_name) {
            if (target_col >= 0) {
                throw DataError("duplicate target column '" + target_name + "'");
            }
            target_col = static_cast<Eigen::Index>(j);
        }
    }
    if (target_col < 0) {
        throw DataError("target column '" + target_name + "' not found in header");
    }
    const Eigen::Index p = static_cast<Eigen::Index>(header.size()) - 1;
    if (p < 1) {
        throw DataError("no feature columns besides the target");
    }

    std::vector<std::vector<double>> feature_rows;
    std::vector<std::string> raw_targets;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const std::vector<std::string> fields = split_line(line);
        if (fields.size() != header.size()) {
            throw DataError("row " + std::to_string(line_no) + " has " +
                            std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(header.size()));
        }
        std::vector<double> row;
        row.reserve(p);
        for (std::size_t j = 0; j < fields.size(); ++j) {
            if (static_cast<Eigen::Index>(j) == target_col) {
                raw_targets.push_back(trim(fields[j]));
                continue;
            }
            double v;
            if (!parse_double(fields[j], v) || !std::isfinite(v)) {
                throw DataError("non-numeric feature '" + trim(fields[j]) + "' at row " +
                                std::to_string(line_no) + ", column '" + trim(header[j]) + "'");
            }
            row.push_back(v);
        }
        feature_rows.push_back(std::move(row));
    }
    if (feature_rows.empty()) {
        throw DataError("file '" + path + "' has a header but no data rows");
    }

    const Eigen::Index n = static_cast<Eigen::Index>(feature_rows.size());
    Dataset ds;
    ds.task = task;
    ds.features.resize(n, p);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < p; ++j) {
            ds.features(i, j) = feature_rows[i][j];
        }
    }
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (static_cast<Eigen::Index>(j) != target_col) {
            ds.feature_names.push_back(trim(header[j]));
        }
    }

    ds.target.resize(n);
    if (task == Task::kRegression) {
        for (Eigen::Index i = 0; i < n; ++i) {
            double v;
            if (!parse_double(raw_targets[i], v) || !std::isfinite(v)) {
                throw DataError("non-numeric regression target '" + raw_targets[i] + "'");
            }
            ds.target[i] = v;
        }
    } else {
        std::vector<std::string> labels;
        for (const auto& t : raw_targets) {
            if (std::find(labels.begin(), labels.end(), t) == labels.end()) {
                labels.push_back(t);
            }
        }
        if (labels.size() > 2) {
            throw DataError("classification target has " + std::to_string(labels.size()) +
                            " distinct labels; only binary targets are supported");
        }
        // Ascending raw order: numeric when both labels parse, else bytewise.
        if (labels.size() == 2) {
            double a, b;
            const bool numeric = parse_double(labels[0], a) && parse_double(labels[1], b);
            const bool swap = numeric ? (b < a) : (labels[1] < labels[0]);
            if (swap) {
                std::swap(labels[0], labels[1]);
            }
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            ds.target[i] = (raw_targets[i] == labels[0]) ? 0.0 : 1.0;
        }
    }

    validate(ds);
    return ds;
}

namespace {

std::string format_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_csv(const Dataset& ds, const std::string& path, const std::string& target_name) {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot write '" + path + "'");
    }
    for (const auto& name : ds.feature_names) {
        out << name << ',';
    }
    out << target_name << '\n';
    for (Eigen::Index i = 0; i < ds.rows(); ++i) {
        for (Eigen::Index j = 0; j < ds.cols(); ++j) {
            out << format_cell(ds.features(i, j)) << ',';
        }
        if (ds.task == Task::kClassification) {
            out << static_cast<int>(ds.target[i]);
        } else {
            out << format_cell(ds.target[i]);
        }
        out << '\n';
    }
    if (!out) {
        throw DataError("write failed for '" + path + "'");
    }
}

namespace {

// Fisher-Yates over `idx` driven by the stream.
void shuffle_indices(std::vector<Eigen::Index>& idx, RngStream& rng) {
    for (std::size_t i = idx.size(); i > 1; --i) {
        const std::uint64_t j = rng.next_index(i);
        std::swap(idx[i - 1], idx[j]);
    }
}

Eigen::Index train_count(Eigen::Index n, double fraction) {
    auto k = static_cast<Eigen::Index>(std::floor(static_cast<double>(n) * fraction + 0.5));
    return std::clamp<Eigen::Index>(k, 1, n - 1);
}

}  // namespace

TrainTestSplit split(const Dataset& ds, double train_fraction, RngStream& rng) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw ConfigError("train fraction must lie in (0,1)");
    }
    const Eigen::Index n = ds.rows();
    if (n < 2) {
        throw DataError("cannot split a dataset with fewer than 2 rows");
    }

    TrainTestSplit out;
    if (ds.task == Task::kRegression) {
        std::vector<Eigen::Index> idx(n);
        std::iota(idx.begin(), idx.end(), Eigen::Index{0});
        shuffle_indices(idx, rng);
        const Eigen::Index k = train_count(n, train_fraction);
        out.train_indices.assign(idx.begin(), idx.begin() + k);
        out.test_indices.assign(idx.begin() + k, idx.end());
    } else {
        // Stratified: shuffle and split each class separately.
        std::vector<Eigen::Index> class_idx[2];
        for (Eigen::Index i = 0; i < n; ++i) {
            class_idx[ds.target[i] == 1.0 ? 1 : 0].push_back(i);
        }
        for (int c = 0; c < 2; ++c) {
            if (class_idx[c].size() < 2) {
                throw DataError("stratified split requires at least 2 members per class");
            }
        }
        for (int c = 0; c < 2; ++c) {
            shuffle_indices(class_idx[c], rng);
            const auto nc = static_cast<Eigen::Index>(class_idx[c].size());
            const Eigen::Index k = train_count(nc, train_fraction);
            out.train_indices.insert(out.train_indices.end(), class_idx[c].begin(),
                                     class_idx[c].begin() + k);
            out.test_indices.insert(out.test_indices.end(), class_idx[c].begin() + k,
                                    class_idx[c].end());
        }
        std::sort(out.train_indices.begin(), out.train_indices.end());
        std::sort(out.test_indices.begin(), out.test_indices.end());
    }
    return out;
}

Dataset take_rows(const Dataset& ds, const std::vector<Eigen::Index>& indices) {
    Dataset out;
    out.task = ds.task;
    out.feature_names = ds.feature_names;
    out.features.resize(static_cast<Eigen::Index>(indices.size()), ds.cols());
    out.target.resize(static_cast<Eigen::Index>(indices.size()));
    for (std::size_t r = 0; r < indices.size(); ++r) {
        out.features.row(static_cast<Eigen::Index>(r)) = ds.features.row(indices[r]);
        out.target[static_cast<Eigen::Index>(r)] = ds.target[indices[r]];
    }
    return out;
}

}  // namespace rssl
