#include "rssl/learners.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rssl/errors.hpp"

namespace rssl {

namespace {

constexpr double kProbClip = 1e-12;

Eigen::MatrixXd with_intercept(const Eigen::MatrixXd& X) {
    Eigen::MatrixXd Z(X.rows(), X.cols() + 1);
    Z.col(0).setOnes();
    Z.rightCols(X.cols()) = X;
    return Z;
}

std::vector<Eigen::Index> default_indices(Eigen::Index d) {
    std::vector<Eigen::Index> idx(d);
    std::iota(idx.begin(), idx.end(), Eigen::Index{0});
    return idx;
}

}  // namespace

LinearModel fit_ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, const FitConfig& config) {
    if (X.rows() < 1 || X.cols() < 1) {
        throw std::invalid_argument("fit_ols: empty design");
    }
    if (X.rows() != y.size()) {
        throw std::invalid_argument("fit_ols: X and y row counts differ");
    }
    if (!X.allFinite() || !y.allFinite()) {
        throw DataError("fit_ols: non-finite input");
    }

    const Eigen::MatrixXd Z = with_intercept(X);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(Z, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(config.svd_rcond);
    const Eigen::VectorXd theta = svd.solve(y);

    LinearModel model;
    model.intercept = theta[0];
    model.coefficients = theta.tail(X.cols());
    model.feature_indices = default_indices(X.cols());
    return model;
}

double predict_linear(const LinearModel& model, const Eigen::RowVectorXd& x) {
    double acc = model.intercept;
    for (Eigen::Index k = 0; k < model.coefficients.size(); ++k) {
        acc += model.coefficients[k] * x[model.feature_indices[k]];
    }
    return acc;
}

double logistic_objective(const Eigen::MatrixXd& X, const Eigen::VectorXd& labels,
                          double intercept, const Eigen::VectorXd& slopes, double ridge) {
    double ll = 0.0;
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
        const double eta = intercept + X.row(i).dot(slopes);
        // y*eta - log(1 + exp(eta)), stable for large |eta|
        ll += labels[i] * eta - (std::max(eta, 0.0) + std::log1p(std::exp(-std::abs(eta))));
    }
    return ll - 0.5 * ridge * slopes.squaredNorm();
}

Eigen::VectorXd logistic_gradient(const Eigen::MatrixXd& X, const Eigen::VectorXd& labels,
                                  double intercept, const Eigen::VectorXd& slopes, double ridge) {
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(X.cols() + 1);
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
        const double resid = labels[i] - sigmoid(intercept + X.row(i).dot(slopes));
        grad[0] += resid;
        grad.tail(X.cols()) += resid * X.row(i).transpose();
    }
    grad.tail(X.cols()) -= ridge * slopes;
    return grad;
}

LogisticModel fit_logistic(const Eigen::MatrixXd& X, const Eigen::VectorXd& labels,
                           const FitConfig& config) {
    const Eigen::Index m = X.rows();
    const Eigen::Index d = X.cols();
    if (m < 2) {
        throw std::invalid_argument("fit_logistic: need at least 2 rows");
    }
    if (m != labels.size()) {
        throw std::invalid_argument("fit_logistic: X and labels row counts differ");
    }
    if (!X.allFinite() || !labels.allFinite()) {
        throw DataError("fit_logistic: non-finite input");
    }
    bool seen0 = false, seen1 = false;
    for (Eigen::Index i = 0; i < m; ++i) {
        (labels[i] == 1.0 ? seen1 : seen0) = true;
    }
    if (!seen0 || !seen1) {
        throw DataError("fit_logistic: degenerate labels (single class)");
    }

    const double ridge = config.ridge_jitter;
    const Eigen::MatrixXd Z = with_intercept(X);

    Eigen::VectorXd theta = Eigen::VectorXd::Zero(d + 1);
    double obj = logistic_objective(X, labels, theta[0], theta.tail(d), ridge);

    LogisticModel model;
    for (int iter = 1; iter <= config.max_iter; ++iter) {
        model.iterations = iter;

        Eigen::VectorXd p(m), w(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            const double pi = std::clamp(sigmoid(Z.row(i).dot(theta)), kProbClip, 1.0 - kProbClip);
            p[i] = pi;
            w[i] = pi * (1.0 - pi);
        }

        Eigen::VectorXd grad = Z.transpose() * (labels - p);
        grad.tail(d) -= ridge * theta.tail(d);
        Eigen::MatrixXd hess = Z.transpose() * w.asDiagonal() * Z;
        hess.bottomRightCorner(d, d).diagonal().array() += ridge;

        Eigen::VectorXd step = hess.ldlt().solve(grad);
        if (!step.allFinite()) {
            hess.diagonal().array() += 1e-10;
            step = hess.ldlt().solve(grad);
            if (!step.allFinite()) {
                throw NumericError("fit_logistic: IRLS step failed");
            }
        }

        // Step-halving keeps the penalized log-likelihood non-decreasing.
        double scale = 1.0;
        double new_obj = obj;
        Eigen::VectorXd candidate = theta;
        bool improved = false;
        for (int h = 0; h <= 30; ++h) {
            candidate = theta + scale * step;
            new_obj = logistic_objective(X, labels, candidate[0], candidate.tail(d), ridge);
            if (std::isfinite(new_obj) && new_obj >= obj) {
                improved = true;
                break;
            }
            scale *= 0.5;
        }
        if (!improved) {
            // No ascent direction left; we are at a numerical optimum.
            model.converged = true;
            break;
        }

        theta = candidate;
        const double gain = new_obj - obj;
        obj = new_obj;
        if (gain < config.tol) {
            model.converged = true;
            break;
        }
    }

    model.intercept = theta[0];
    model.coefficients = theta.tail(d);
    model.feature_indices = default_indices(d);
    if (!theta.allFinite()) {
        throw NumericError("fit_logistic: non-finite parameters");
    }
    return model;
}

double predict_proba(const LogisticModel& model, const Eigen::RowVectorXd& x) {
    double eta = model.intercept;
    for (Eigen::Index k = 0; k < model.coefficients.size(); ++k) {
        eta += model.coefficients[k] * x[model.feature_indices[k]];
    }
    return sigmoid(eta);
}

int predict_class(const LogisticModel& model, const Eigen::RowVectorXd& x) {
    return predict_proba(model, x) >= 0.5 ? 1 : 0;
}

}  // namespace rssl
