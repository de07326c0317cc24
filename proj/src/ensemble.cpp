#include "rssl/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rssl/errors.hpp"
#include "rssl/parallel.hpp"

namespace rssl {

Eigen::Index resolve_subset_size(int configured, Eigen::Index n, Eigen::Index p) {
    if (configured > 0) {
        if (configured > p) {
            throw ConfigError("subset size " + std::to_string(configured) + " exceeds p = " +
                              std::to_string(p));
        }
        return configured;
    }
    const auto root = static_cast<Eigen::Index>(std::ceil(std::sqrt(static_cast<double>(p))));
    return std::max<Eigen::Index>(1, std::min(root, n - 2));
}

FeatureWeights compute_weights(const Dataset& train, WeightScheme scheme) {
    switch (scheme) {
        case WeightScheme::kUniform:
            return uniform_weights(train.cols());
        case WeightScheme::kCorrelation:
            return correlation_weights(train.features, train.target);
        case WeightScheme::kFStatistic:
            return train.task == Task::kClassification
                       ? fstat_weights_classification(train.features, train.target)
                       : fstat_weights_regression(train.features, train.target);
    }
    throw std::invalid_argument("compute_weights: bad scheme");
}

namespace {

constexpr int kMaxBootstrapRetries = 20;

Eigen::MatrixXd gather(const Eigen::MatrixXd& X, const std::vector<Eigen::Index>& rows,
                       const std::vector<Eigen::Index>& cols) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()),
                        static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = X(rows[i], cols[j]);
        }
    }
    return out;
}

Eigen::VectorXd gather_vec(const Eigen::VectorXd& y, const std::vector<Eigen::Index>& rows) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out[static_cast<Eigen::Index>(i)] = y[rows[i]];
    }
    return out;
}

bool has_both_classes(const Eigen::VectorXd& labels) {
    bool seen0 = false, seen1 = false;
    for (Eigen::Index i = 0; i < labels.size(); ++i) {
        (labels[i] == 1.0 ? seen1 : seen0) = true;
    }
    return seen0 && seen1;
}

std::vector<std::uint64_t> member_label(const std::vector<std::uint64_t>& prefix,
                                        std::uint64_t learner, std::uint64_t purpose) {
    std::vector<std::uint64_t> label = prefix;
    label.push_back(learner);
    label.push_back(purpose);
    return label;
}

}  // namespace

EnsembleModel train_rssl(const Dataset& train, const RsslConfig& config) {
    validate(train);
    if (config.learners < 1) {
        throw ConfigError("ensemble needs at least one learner");
    }
    const Eigen::Index n = train.rows();
    const Eigen::Index p = train.cols();
    const Eigen::Index d = resolve_subset_size(config.subset_size, n, p);

    EnsembleModel model;
    model.task = config.task;
    model.weights_used = compute_weights(train, config.weighting);
    model.subset_size = static_cast<int>(d);
    model.weighting = config.weighting;
    model.seed = config.seed;
    model.members.resize(config.learners);

    std::vector<Eigen::Index> identity(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        identity[i] = i;
    }

    parallel_for(static_cast<std::size_t>(config.learners), config.threads, [&](std::size_t slot) {
        const auto l = static_cast<std::uint64_t>(slot) + 1;  // 1-based learner index
        RngStream boot_rng =
            RngStream::derive(config.seed, member_label(config.stream_prefix, l, kPurposeBootstrap));
        RngStream subset_rng =
            RngStream::derive(config.seed, member_label(config.stream_prefix, l, kPurposeSubset));

        const SubsetDraw subset = draw_subset(model.weights_used, d, subset_rng);

        EnsembleMember member;
        member.subset = subset;
        if (config.task == Task::kRegression) {
            const std::vector<Eigen::Index>& rows =
                config.no_resample ? identity : bootstrap(n, boot_rng).indices;
            LinearModel fitted = fit_ols(gather(train.features, rows, subset.indices),
                                         gather_vec(train.target, rows), config.fit);
            fitted.feature_indices = subset.indices;
            member.model = std::move(fitted);
        } else {
            // Redraw bootstraps whose labels collapse to a single class.
            std::vector<Eigen::Index> rows;
            Eigen::VectorXd labels;
            bool usable = false;
            for (int attempt = 0; attempt < kMaxBootstrapRetries; ++attempt) {
                rows = config.no_resample ? identity : bootstrap(n, boot_rng).indices;
                labels = gather_vec(train.target, rows);
                if (has_both_classes(labels)) {
                    usable = true;
                    break;
                }
                if (config.no_resample) {
                    break;
                }
            }
            if (!usable) {
                throw NumericError("train_rssl: bootstrap replicate degenerate after " +
                                   std::to_string(kMaxBootstrapRetries) + " attempts");
            }
            LogisticModel fitted =
                fit_logistic(gather(train.features, rows, subset.indices), labels, config.fit);
            fitted.feature_indices = subset.indices;
            member.model = std::move(fitted);
        }
        model.members[slot] = std::move(member);
    });

    return model;
}

double predict_regression(const EnsembleModel& model, const Eigen::RowVectorXd& x) {
    if (model.task != Task::kRegression) {
        throw std::invalid_argument("predict_regression: classification ensemble");
    }
    double sum = 0.0;
    for (const auto& member : model.members) {
        sum += predict_linear(std::get<LinearModel>(member.model), x);
    }
    return sum / static_cast<double>(model.members.size());
}

double predict_proba_ensemble(const EnsembleModel& model, const Eigen::RowVectorXd& x) {
    if (model.task != Task::kClassification) {
        throw std::invalid_argument("predict_proba_ensemble: regression ensemble");
    }
    double sum = 0.0;
    for (const auto& member : model.members) {
        sum += predict_proba(std::get<LogisticModel>(member.model), x);
    }
    return sum / static_cast<double>(model.members.size());
}

int predict_class(const EnsembleModel& model, const Eigen::RowVectorXd& x) {
    if (model.task != Task::kClassification) {
        throw std::invalid_argument("predict_class: regression ensemble");
    }
    std::size_t votes1 = 0;
    for (const auto& member : model.members) {
        votes1 += predict_class(std::get<LogisticModel>(member.model), x) == 1 ? 1 : 0;
    }
    const std::size_t votes0 = model.members.size() - votes1;
    if (votes1 != votes0) {
        return votes1 > votes0 ? 1 : 0;
    }
    return predict_proba_ensemble(model, x) > 0.5 ? 1 : 0;
}

nlohmann::json to_json(const EnsembleModel& model) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& member : model.members) {
        nlohmann::json m;
        m["subset"] = member.subset.indices;
        if (model.task == Task::kRegression) {
            const auto& lin = std::get<LinearModel>(member.model);
            m["intercept"] = lin.intercept;
            m["coefficients"] = std::vector<double>(lin.coefficients.begin(), lin.coefficients.end());
        } else {
            const auto& log = std::get<LogisticModel>(member.model);
            m["intercept"] = log.intercept;
            m["coefficients"] = std::vector<double>(log.coefficients.begin(), log.coefficients.end());
        }
        members.push_back(std::move(m));
    }
    nlohmann::json j;
    j["task"] = task_name(model.task);
    j["L"] = model.members.size();
    j["d"] = model.subset_size;
    j["weighting"] = scheme_name(model.weighting);
    j["seed"] = model.seed;
    j["members"] = std::move(members);
    j["weights_used"] =
        std::vector<double>(model.weights_used.weights.begin(), model.weights_used.weights.end());
    return j;
}

EnsembleModel ensemble_from_json(const nlohmann::json& j) {
    EnsembleModel model;
    model.task = parse_task(j.at("task").get<std::string>());
    model.subset_size = j.at("d").get<int>();
    model.weighting = parse_scheme(j.at("weighting").get<std::string>());
    model.seed = j.at("seed").get<std::uint64_t>();
    const auto weights = j.at("weights_used").get<std::vector<double>>();
    model.weights_used.scheme = model.weighting;
    model.weights_used.weights =
        Eigen::Map<const Eigen::VectorXd>(weights.data(), static_cast<Eigen::Index>(weights.size()));
    for (const auto& m : j.at("members")) {
        EnsembleMember member;
        member.subset.indices = m.at("subset").get<std::vector<Eigen::Index>>();
        const auto coefs = m.at("coefficients").get<std::vector<double>>();
        const Eigen::VectorXd cvec =
            Eigen::Map<const Eigen::VectorXd>(coefs.data(), static_cast<Eigen::Index>(coefs.size()));
        if (model.task == Task::kRegression) {
            LinearModel lin;
            lin.intercept = m.at("intercept").get<double>();
            lin.coefficients = cvec;
            lin.feature_indices = member.subset.indices;
            member.model = std::move(lin);
        } else {
            LogisticModel log;
            log.intercept = m.at("intercept").get<double>();
            log.coefficients = cvec;
            log.feature_indices = member.subset.indices;
            log.converged = true;
            member.model = std::move(log);
        }
        model.members.push_back(std::move(member));
    }
    return model;
}

}  // namespace rssl
