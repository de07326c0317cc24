#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rssl/dataset.hpp"

namespace rssl {

/// One synthetic scenario: n train rows, p equicorrelated Gaussian features
/// with pairwise correlation rho, k_true unit coefficients, unit-free noise.
struct ScenarioConfig {
    Eigen::Index n = 100;
    Eigen::Index p = 10;
    double rho = 0.0;
    Task task = Task::kRegression;
    std::uint64_t seed = 0;
    Eigen::Index k_true = 0;  // 0 = auto: min(10, p)
    double noise_sd = 1.0;
    Eigen::Index test_size = 1000;
    std::vector<std::uint64_t> stream_prefix;
};

Eigen::Index resolve_k_true(const ScenarioConfig& config);

/// The coefficient vector the generator uses: 1 for the first k_true features,
/// 0 elsewhere, zero intercept.
Eigen::VectorXd true_beta(const ScenarioConfig& config);

/// Draws independent train (n rows) and test (test_size rows) sets. Feature
/// rows are x = sqrt(rho) * z0 * 1 + sqrt(1 - rho) * z with z0 scalar and z
/// iid standard normal, giving population covariance (1 - rho) I + rho J.
/// Regression targets are X beta + noise; classification labels are
/// Bernoulli(sigmoid(X beta)), regenerated on a fresh sub-stream (at most 20
/// attempts) if a part comes out single-class.
std::pair<Dataset, Dataset> generate(const ScenarioConfig& config);

/// The twelve (n, p, rho, task) scenario tuples of the comparison grid; the
/// remaining fields take artifact defaults and the given seed.
std::vector<ScenarioConfig> scenario_grid(std::uint64_t seed = 0);

/// Stable identifier, e.g. "regression_n200_p25_rho0.05".
std::string scenario_name(const ScenarioConfig& config);

}  // namespace rssl
