#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rssl/dataset.hpp"
#include "rssl/learners.hpp"
#include "rssl/sampling.hpp"
#include "rssl/weighting.hpp"

namespace rssl {

struct RsslConfig {
    int learners = 450;
    int subset_size = 0;  // 0 = auto: min(ceil(sqrt(p)), n - 2), floor 1
    WeightScheme weighting = WeightScheme::kUniform;
    Task task = Task::kRegression;
    FitConfig fit;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> stream_prefix;  // e.g. {replication, method_tag}
    bool no_resample = false;                  // test hook: identity bootstrap
    int threads = 1;
};

struct EnsembleMember {
    SubsetDraw subset;
    std::variant<LinearModel, LogisticModel> model;
};

struct EnsembleModel {
    Task task = Task::kRegression;
    std::vector<EnsembleMember> members;
    FeatureWeights weights_used;
    int subset_size = 0;
    WeightScheme weighting = WeightScheme::kUniform;
    std::uint64_t seed = 0;
};

/// Effective subset size for a training set of n rows and p features.
Eigen::Index resolve_subset_size(int configured, Eigen::Index n, Eigen::Index p);

/// Feature weights on the full training set per the configured scheme,
/// computed once before any resampling.
FeatureWeights compute_weights(const Dataset& train, WeightScheme scheme);

/// Trains L base learners, each on a fresh bootstrap replicate restricted to a
/// weighted feature subset. Deterministic given (seed, stream_prefix); member
/// fitting may run on config.threads without changing the result.
EnsembleModel train_rssl(const Dataset& train, const RsslConfig& config);

/// Arithmetic mean of member predictions (task must be Regression).
double predict_regression(const EnsembleModel& model, const Eigen::RowVectorXd& x);

/// Majority vote of member hard predictions (task must be Classification).
/// Vote ties fall back to the mean member probability: > 0.5 gives class 1,
/// otherwise class 0.
int predict_class(const EnsembleModel& model, const Eigen::RowVectorXd& x);

/// Mean of member probabilities.
double predict_proba_ensemble(const EnsembleModel& model, const Eigen::RowVectorXd& x);

nlohmann::json to_json(const EnsembleModel& model);
EnsembleModel ensemble_from_json(const nlohmann::json& j);

}  // namespace rssl
