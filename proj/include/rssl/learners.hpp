#pragma once

#include <Eigen/Dense>
#include <vector>

namespace rssl {

struct FitConfig {
    double ridge_jitter = 1e-6;  // L2 penalty on logistic slopes, intercept unpenalized
    int max_iter = 100;
    double tol = 1e-8;           // IRLS stops when the penalized log-likelihood gain drops below
    double svd_rcond = 1e-10;    // singular values below svd_rcond * sigma_max are treated as zero
};

struct LinearModel {
    double intercept = 0.0;
    Eigen::VectorXd coefficients;
    std::vector<Eigen::Index> feature_indices;
};

struct LogisticModel {
    double intercept = 0.0;
    Eigen::VectorXd coefficients;
    std::vector<Eigen::Index> feature_indices;
    bool converged = false;
    int iterations = 0;
};

/// Minimum-norm least squares of [1 | X] * theta ~ y via SVD. Rank-deficient
/// designs (including d + 1 > m) get the minimum Euclidean norm solution.
/// feature_indices defaults to 0..d-1; callers fitting on a column subset
/// overwrite it with the original indices.
LinearModel fit_ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, const FitConfig& config);

double predict_linear(const LinearModel& model, const Eigen::RowVectorXd& x);

/// Binary logistic regression maximizing the L2-penalized Bernoulli
/// log-likelihood by iteratively reweighted least squares with step-halving.
/// Requires both labels present.
LogisticModel fit_logistic(const Eigen::MatrixXd& X, const Eigen::VectorXd& labels,
                           const FitConfig& config);

double predict_proba(const LogisticModel& model, const Eigen::RowVectorXd& x);
int predict_class(const LogisticModel& model, const Eigen::RowVectorXd& x);

/// Penalized Bernoulli log-likelihood at (intercept, slopes); the objective
/// fit_logistic maximizes. Exposed for stationarity checks.
double logistic_objective(const Eigen::MatrixXd& X, const Eigen::VectorXd& labels,
                          double intercept, const Eigen::VectorXd& slopes, double ridge);

/// Gradient of logistic_objective with respect to (intercept, slopes),
/// length d + 1, intercept first.
Eigen::VectorXd logistic_gradient(const Eigen::MatrixXd& X, const Eigen::VectorXd& labels,
                                  double intercept, const Eigen::VectorXd& slopes, double ridge);

inline double sigmoid(double eta) {
    if (eta >= 0.0) {
        return 1.0 / (1.0 + std::exp(-eta));
    }
    const double e = std::exp(eta);
    return e / (1.0 + e);
}

}  // namespace rssl
