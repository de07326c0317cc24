#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "rssl/dataset.hpp"
#include "rssl/rng.hpp"

namespace rssl {

struct ForestConfig {
    int trees = 450;
    int mtry = 0;      // 0 = auto: ceil(sqrt(p)) classification, ceil(p/3) regression
    int min_leaf = 0;  // 0 = auto: 5 regression, 1 classification
    int max_depth = 30;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> stream_prefix;
    int threads = 1;
};

/// Leaf (value) or split (feature, threshold, child slots); nodes live in the
/// owning Tree's arena, root at index 0. x <= threshold routes left.
struct TreeNode {
    bool is_leaf = true;
    double value = 0.0;
    int feature = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
};

struct Tree {
    std::vector<TreeNode> nodes;
};

struct ForestModel {
    Task task = Task::kRegression;
    std::vector<Tree> trees;
};

/// Greedy binary CART over a random mtry feature sample per node. Impurity:
/// variance for regression, Gini for classification; thresholds at midpoints
/// of consecutive sorted unique values.
Tree fit_tree(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, Task task,
              const ForestConfig& config, RngStream& rng);

/// `trees` independent trees, each on its own bootstrap replicate.
ForestModel fit_forest(const Dataset& train, const ForestConfig& config);

double predict_tree(const Tree& tree, const Eigen::RowVectorXd& x);

/// Mean of tree outputs (regression) or majority vote with exact ties going to
/// class 0 (classification).
double predict_forest(const ForestModel& model, const Eigen::RowVectorXd& x);

}  // namespace rssl
