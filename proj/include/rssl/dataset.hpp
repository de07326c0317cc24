#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "rssl/rng.hpp"

namespace rssl {

enum class Task { kRegression, kClassification };

std::string task_name(Task task);
Task parse_task(const std::string& name);

/// Numeric feature matrix plus target vector. Immutable by convention once
/// built; classification targets hold class ids in {0, 1}.
struct Dataset {
    Eigen::MatrixXd features;  // n x p
    Eigen::VectorXd target;    // n
    std::vector<std::string> feature_names;
    Task task = Task::kRegression;

    Eigen::Index rows() const { return features.rows(); }
    Eigen::Index cols() const { return features.cols(); }
};

struct TrainTestSplit {
    std::vector<Eigen::Index> train_indices;
    std::vector<Eigen::Index> test_indices;
};

/// Checks the Dataset invariants (finite cells, {0,1} class targets, shape
/// consistency); throws DataError on violation.
void validate(const Dataset& ds);

/// Loads a comma-separated file (header row, decimal-point reals, UTF-8).
/// The target column is removed from the features; column order is preserved.
/// Classification targets must take exactly two distinct raw values, mapped to
/// {0, 1} in ascending raw order (numeric when both values parse, else
/// bytewise).
Dataset load_csv(const std::string& path, const std::string& target_name, Task task);

/// Writes a Dataset back to CSV with 17 significant digits so that
/// load_csv(write_csv(ds)) reproduces ds exactly.
void write_csv(const Dataset& ds, const std::string& path, const std::string& target_name = "y");

/// Uniformly random permutation split; classification splits are stratified
/// per class. Deterministic given the rng stream.
TrainTestSplit split(const Dataset& ds, double train_fraction, RngStream& rng);

/// Materializes the rows named by `indices` into a new Dataset.
Dataset take_rows(const Dataset& ds, const std::vector<Eigen::Index>& indices);

}  // namespace rssl
