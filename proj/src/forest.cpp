#include "rssl/forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rssl/errors.hpp"
#include "rssl/parallel.hpp"
#include "rssl/sampling.hpp"

namespace rssl {

namespace {

int resolve_mtry(int configured, Eigen::Index p, Task task) {
    if (configured > 0) {
        return std::min<int>(configured, static_cast<int>(p));
    }
    const double raw = task == Task::kClassification ? std::sqrt(static_cast<double>(p))
                                                     : static_cast<double>(p) / 3.0;
    return std::max(1, static_cast<int>(std::ceil(raw)));
}

int resolve_min_leaf(int configured, Task task) {
    if (configured > 0) {
        return configured;
    }
    return task == Task::kRegression ? 5 : 1;
}

struct NodeStats {
    double impurity = 0.0;  // variance (regression) or Gini (classification)
    double leaf_value = 0.0;
};

NodeStats node_stats(const Eigen::VectorXd& y, const std::vector<Eigen::Index>& rows, Task task) {
    NodeStats stats;
    const auto m = static_cast<double>(rows.size());
    if (task == Task::kRegression) {
        double sum = 0.0, sq = 0.0;
        for (Eigen::Index r : rows) {
            sum += y[r];
            sq += y[r] * y[r];
        }
        const double mean = sum / m;
        stats.impurity = std::max(0.0, sq / m - mean * mean);
        stats.leaf_value = mean;
    } else {
        double c1 = 0.0;
        for (Eigen::Index r : rows) {
            c1 += y[r] == 1.0 ? 1.0 : 0.0;
        }
        const double p1 = c1 / m;
        stats.impurity = 2.0 * p1 * (1.0 - p1);
        stats.leaf_value = c1 > m - c1 ? 1.0 : 0.0;  // majority, ties to class 0
    }
    return stats;
}

struct BestSplit {
    bool found = false;
    int feature = -1;
    double threshold = 0.0;
    double score = 0.0;  // weighted child impurity
};

// Partial Fisher-Yates: the first `k` entries of a fresh index array.
std::vector<int> sample_features(Eigen::Index p, int k, RngStream& rng) {
    std::vector<int> idx(p);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < k; ++i) {
        const auto j = static_cast<std::size_t>(i) +
                       rng.next_index(static_cast<std::uint64_t>(p - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

class TreeBuilder {
public:
    TreeBuilder(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, Task task,
                int mtry, int min_leaf, int max_depth, RngStream& rng)
        : X_(X), y_(y), task_(task), mtry_(mtry), min_leaf_(min_leaf),
          max_depth_(max_depth), rng_(rng) {}

    Tree build(std::vector<Eigen::Index> rows) {
        Tree tree;
        grow(tree, std::move(rows), 0);
        return tree;
    }

private:
    int grow(Tree& tree, std::vector<Eigen::Index> rows, int depth) {
        const int slot = static_cast<int>(tree.nodes.size());
        tree.nodes.emplace_back();
        const NodeStats stats = node_stats(y_, rows, task_);
        tree.nodes[slot].value = stats.leaf_value;

        const bool can_split = stats.impurity > 0.0 && depth < max_depth_ &&
                               static_cast<int>(rows.size()) >= 2 * min_leaf_;
        if (!can_split) {
            return slot;
        }
        const BestSplit best = find_split(rows, stats.impurity);
        if (!best.found) {
            return slot;
        }

        std::vector<Eigen::Index> left_rows, right_rows;
        for (Eigen::Index r : rows) {
            (X_(r, best.feature) <= best.threshold ? left_rows : right_rows).push_back(r);
        }
        rows.clear();
        rows.shrink_to_fit();

        const int left = grow(tree, std::move(left_rows), depth + 1);
        const int right = grow(tree, std::move(right_rows), depth + 1);
        TreeNode& node = tree.nodes[slot];
        node.is_leaf = false;
        node.feature = best.feature;
        node.threshold = best.threshold;
        node.left = left;
        node.right = right;
        return slot;
    }

    BestSplit find_split(const std::vector<Eigen::Index>& rows, double parent_impurity) {
        const auto m = static_cast<double>(rows.size());
        BestSplit best;
        best.score = parent_impurity;

        std::vector<std::pair<double, double>> vals(rows.size());  // (x, y)
        for (int f : sample_features(X_.cols(), mtry_, rng_)) {
            for (std::size_t i = 0; i < rows.size(); ++i) {
                vals[i] = {X_(rows[i], f), y_[rows[i]]};
            }
            std::sort(vals.begin(), vals.end());

            // One left-to-right pass with running sums; candidate split points
            // sit between distinct consecutive values.
            double lsum = 0.0, lsq = 0.0, lc1 = 0.0;
            double tsum = 0.0, tsq = 0.0, tc1 = 0.0;
            for (const auto& [xv, yv] : vals) {
                tsum += yv;
                tsq += yv * yv;
                tc1 += yv == 1.0 ? 1.0 : 0.0;
            }
            for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
                lsum += vals[i].second;
                lsq += vals[i].second * vals[i].second;
                lc1 += vals[i].second == 1.0 ? 1.0 : 0.0;
                if (vals[i].first == vals[i + 1].first) {
                    continue;
                }
                const double ml = static_cast<double>(i + 1);
                const double mr = m - ml;
                if (ml < min_leaf_ || mr < min_leaf_) {
                    continue;
                }
                double score;
                if (task_ == Task::kRegression) {
                    const double lvar = std::max(0.0, lsq / ml - (lsum / ml) * (lsum / ml));
                    const double rsum = tsum - lsum;
                    const double rsq = tsq - lsq;
                    const double rvar = std::max(0.0, rsq / mr - (rsum / mr) * (rsum / mr));
                    score = (ml * lvar + mr * rvar) / m;
                } else {
                    const double lp1 = lc1 / ml;
                    const double rp1 = (tc1 - lc1) / mr;
                    score = (ml * 2.0 * lp1 * (1.0 - lp1) + mr * 2.0 * rp1 * (1.0 - rp1)) / m;
                }
                if (score < best.score) {
                    best.found = true;
                    best.feature = f;
                    best.threshold = 0.5 * (vals[i].first + vals[i + 1].first);
                    best.score = score;
                }
            }
        }
        return best;
    }

    const Eigen::MatrixXd& X_;
    const Eigen::VectorXd& y_;
    Task task_;
    int mtry_;
    int min_leaf_;
    int max_depth_;
    RngStream& rng_;
};

}  // namespace

Tree fit_tree(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, Task task,
              const ForestConfig& config, RngStream& rng) {
    if (X.rows() < 1) {
        throw std::invalid_argument("fit_tree: empty data");
    }
    TreeBuilder builder(X, y, task, resolve_mtry(config.mtry, X.cols(), task),
                        resolve_min_leaf(config.min_leaf, task), config.max_depth, rng);
    std::vector<Eigen::Index> rows(X.rows());
    std::iota(rows.begin(), rows.end(), Eigen::Index{0});
    return builder.build(std::move(rows));
}

ForestModel fit_forest(const Dataset& train, const ForestConfig& config) {
    validate(train);
    if (config.trees < 1) {
        throw ConfigError("forest needs at least one tree");
    }
    ForestModel model;
    model.task = train.task;
    model.trees.resize(config.trees);

    parallel_for(static_cast<std::size_t>(config.trees), config.threads, [&](std::size_t slot) {
        const auto t = static_cast<std::uint64_t>(slot) + 1;
        std::vector<std::uint64_t> boot_label = config.stream_prefix;
        boot_label.insert(boot_label.end(), {t, kPurposeBootstrap});
        std::vector<std::uint64_t> tree_label = config.stream_prefix;
        tree_label.insert(tree_label.end(), {t, kPurposeTree});

        RngStream boot_rng = RngStream::derive(config.seed, boot_label);
        RngStream tree_rng = RngStream::derive(config.seed, tree_label);

        const SampleDraw rows = bootstrap(train.rows(), boot_rng);
        Eigen::MatrixXd Xb(train.rows(), train.cols());
        Eigen::VectorXd yb(train.rows());
        for (Eigen::Index i = 0; i < train.rows(); ++i) {
            Xb.row(i) = train.features.row(rows.indices[i]);
            yb[i] = train.target[rows.indices[i]];
        }
        model.trees[slot] = fit_tree(Xb, yb, train.task, config, tree_rng);
    });
    return model;
}

double predict_tree(const Tree& tree, const Eigen::RowVectorXd& x) {
    int node = 0;
    while (!tree.nodes[node].is_leaf) {
        const TreeNode& n = tree.nodes[node];
        node = x[n.feature] <= n.threshold ? n.left : n.right;
    }
    return tree.nodes[node].value;
}

double predict_forest(const ForestModel& model, const Eigen::RowVectorXd& x) {
    if (model.task == Task::kRegression) {
        double sum = 0.0;
        for (const auto& tree : model.trees) {
            sum += predict_tree(tree, x);
        }
        return sum / static_cast<double>(model.trees.size());
    }
    std::size_t votes1 = 0;
    for (const auto& tree : model.trees) {
        votes1 += predict_tree(tree, x) == 1.0 ? 1 : 0;
    }
    return votes1 > model.trees.size() - votes1 ? 1.0 : 0.0;
}

}  // namespace rssl
