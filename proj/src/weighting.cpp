#include "rssl/weighting.hpp"

#include <algorithm>
#include <cmath>

#include "rssl/errors.hpp"

namespace rssl {

std::string scheme_name(WeightScheme scheme) {
    switch (scheme) {
        case WeightScheme::kUniform:
            return "uniform";
        case WeightScheme::kCorrelation:
            return "correlation";
        case WeightScheme::kFStatistic:
            return "fstat";
    }
    return "?";
}

WeightScheme parse_scheme(const std::string& name) {
    if (name == "uniform") {
        return WeightScheme::kUniform;
    }
    if (name == "correlation") {
        return WeightScheme::kCorrelation;
    }
    if (name == "fstat") {
        return WeightScheme::kFStatistic;
    }
    throw ConfigError("unknown weighting scheme '" + name + "' (expected uniform|correlation|fstat)");
}

FeatureWeights uniform_weights(Eigen::Index p) {
    if (p < 1) {
        throw std::invalid_argument("uniform_weights: p must be >= 1");
    }
    FeatureWeights w;
    w.scheme = WeightScheme::kUniform;
    w.weights = Eigen::VectorXd::Constant(p, 1.0 / static_cast<double>(p));
    return w;
}

namespace {

FeatureWeights normalize(Eigen::VectorXd raw, WeightScheme scheme) {
    const double total = raw.sum();
    FeatureWeights w;
    w.scheme = scheme;
    if (total <= 0.0) {
        w.weights = Eigen::VectorXd::Constant(raw.size(), 1.0 / static_cast<double>(raw.size()));
    } else {
        w.weights = raw / total;
    }
    return w;
}

// Squared sample Pearson correlation of column j with y; 0 for degenerate
// variances, clamped into [0, 1] against rounding.
double squared_correlation(const Eigen::VectorXd& x, const Eigen::VectorXd& yc, double y_ss) {
    const double mean = x.mean();
    const Eigen::VectorXd xc = x.array() - mean;
    const double x_ss = xc.squaredNorm();
    if (x_ss <= 0.0 || y_ss <= 0.0) {
        return 0.0;
    }
    const double cov = xc.dot(yc);
    const double r2 = (cov * cov) / (x_ss * y_ss);
    return std::clamp(r2, 0.0, 1.0);
}

}  // namespace

FeatureWeights correlation_weights(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    const Eigen::Index n = X.rows();
    const Eigen::Index p = X.cols();
    if (n != y.size()) {
        throw std::invalid_argument("correlation_weights: X and y row counts differ");
    }
    if (n < 3) {
        throw DataError("correlation weights require n >= 3");
    }
    const Eigen::VectorXd yc = y.array() - y.mean();
    const double y_ss = yc.squaredNorm();
    Eigen::VectorXd raw(p);
    for (Eigen::Index j = 0; j < p; ++j) {
        raw[j] = squared_correlation(X.col(j), yc, y_ss);
    }
    return normalize(std::move(raw), WeightScheme::kCorrelation);
}

FeatureWeights fstat_weights_classification(const Eigen::MatrixXd& X, const Eigen::VectorXd& labels) {
    const Eigen::Index n = X.rows();
    if (n != labels.size()) {
        throw std::invalid_argument("fstat_weights_classification: X and labels row counts differ");
    }
    if (n < 3) {
        throw DataError("F-statistic weights require n >= 3");
    }
    Eigen::Index n1 = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        n1 += labels[i] == 1.0 ? 1 : 0;
    }
    const Eigen::Index n0 = n - n1;
    if (n0 == 0 || n1 == 0) {
        throw DataError("F-statistic weights require both classes present");
    }

    Eigen::VectorXd raw(X.cols());
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
        double sum0 = 0.0, sum1 = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            (labels[i] == 1.0 ? sum1 : sum0) += X(i, j);
        }
        const double mean0 = sum0 / static_cast<double>(n0);
        const double mean1 = sum1 / static_cast<double>(n1);
        const double grand = (sum0 + sum1) / static_cast<double>(n);
        double ssw = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double d = X(i, j) - (labels[i] == 1.0 ? mean1 : mean0);
            ssw += d * d;
        }
        const double ssb = static_cast<double>(n0) * (mean0 - grand) * (mean0 - grand) +
                           static_cast<double>(n1) * (mean1 - grand) * (mean1 - grand);
        const double msb = ssb;  // df = g - 1 = 1
        const double msw = ssw / static_cast<double>(n - 2);
        if (msb <= 0.0) {
            raw[j] = 0.0;
        } else if (msw <= 0.0) {
            raw[j] = kFStatCap;
        } else {
            raw[j] = std::min(msb / msw, kFStatCap);
        }
    }
    return normalize(std::move(raw), WeightScheme::kFStatistic);
}

FeatureWeights fstat_weights_regression(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    const Eigen::Index n = X.rows();
    if (n != y.size()) {
        throw std::invalid_argument("fstat_weights_regression: X and y row counts differ");
    }
    if (n < 3) {
        throw DataError("F-statistic weights require n >= 3");
    }
    const Eigen::VectorXd yc = y.array() - y.mean();
    const double y_ss = yc.squaredNorm();
    Eigen::VectorXd raw(X.cols());
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
        const double r2 = squared_correlation(X.col(j), yc, y_ss);
        if (r2 >= 1.0 - 1e-12) {
            raw[j] = kFStatCap;
        } else {
            raw[j] = std::min(static_cast<double>(n - 2) * r2 / (1.0 - r2), kFStatCap);
        }
    }
    return normalize(std::move(raw), WeightScheme::kFStatistic);
}

}  // namespace rssl
