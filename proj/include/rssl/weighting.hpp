#pragma once

#include <Eigen/Dense>
#include <string>

namespace rssl {

enum class WeightScheme { kUniform, kCorrelation, kFStatistic };

std::string scheme_name(WeightScheme scheme);
WeightScheme parse_scheme(const std::string& name);

/// Finite stand-in for an infinite F statistic (perfect separation, r^2 = 1).
inline constexpr double kFStatCap = 1e12;

/// Normalized per-feature selection probabilities: entrywise >= 0, sum 1.
struct FeatureWeights {
    Eigen::VectorXd weights;
    WeightScheme scheme = WeightScheme::kUniform;

    Eigen::Index size() const { return weights.size(); }
};

/// Every entry 1/p.
FeatureWeights uniform_weights(Eigen::Index p);

/// Raw score per column: squared sample Pearson correlation with y.
/// Zero-variance columns (or zero-variance y) score 0; all-zero scores fall
/// back to uniform.
FeatureWeights correlation_weights(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

/// Raw score per column: one-way ANOVA F statistic treating the column as the
/// response and the class label as the treatment group. Conventions: MSB=0 ->
/// 0; MSW=0 with MSB>0 -> kFStatCap; both zero -> 0.
FeatureWeights fstat_weights_classification(const Eigen::MatrixXd& X, const Eigen::VectorXd& labels);

/// Raw score per column: the univariate regression F statistic
/// (n-2) r^2 / (1 - r^2), capped at kFStatCap as r^2 -> 1.
FeatureWeights fstat_weights_regression(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

}  // namespace rssl
