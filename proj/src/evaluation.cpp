#include "rssl/evaluation.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "rssl/errors.hpp"
#include "rssl/parallel.hpp"

namespace rssl {

namespace {

// Stream tags keep method randomness disjoint from the purpose tags and from
// each other regardless of the order methods are requested in.
constexpr std::uint64_t kTagSingle = 10;
constexpr std::uint64_t kTagUniform = 11;
constexpr std::uint64_t kTagAdaptiveCorr = 12;
constexpr std::uint64_t kTagAdaptiveFstat = 13;
constexpr std::uint64_t kTagForest = 14;

}  // namespace

std::string method_name(MethodId id) {
    switch (id) {
        case MethodId::kSingleBase:
            return "single";
        case MethodId::kUniformRssl:
            return "uniform";
        case MethodId::kAdaptiveCorrelation:
            return "adaptive-corr";
        case MethodId::kAdaptiveFStat:
            return "adaptive-fstat";
        case MethodId::kRandomForest:
            return "rf";
    }
    return "?";
}

MethodId parse_method(const std::string& name) {
    for (MethodId id : all_methods()) {
        if (method_name(id) == name) {
            return id;
        }
    }
    throw ConfigError("unknown method '" + name +
                      "' (expected single|uniform|adaptive-corr|adaptive-fstat|rf)");
}

const std::vector<MethodId>& all_methods() {
    static const std::vector<MethodId> ids = {
        MethodId::kSingleBase, MethodId::kUniformRssl, MethodId::kAdaptiveCorrelation,
        MethodId::kAdaptiveFStat, MethodId::kRandomForest,
    };
    return ids;
}

namespace {

Predictor fit_single_base(const Dataset& train, const FitConfig& fit) {
    if (train.task == Task::kRegression) {
        auto model = std::make_shared<LinearModel>(fit_ols(train.features, train.target, fit));
        return [model](const Eigen::RowVectorXd& x) { return predict_linear(*model, x); };
    }
    auto model = std::make_shared<LogisticModel>(fit_logistic(train.features, train.target, fit));
    return [model](const Eigen::RowVectorXd& x) {
        return static_cast<double>(predict_class(*model, x));
    };
}

Predictor fit_rssl_method(const Dataset& train, RsslConfig config) {
    auto model = std::make_shared<EnsembleModel>(train_rssl(train, config));
    if (train.task == Task::kRegression) {
        return [model](const Eigen::RowVectorXd& x) { return predict_regression(*model, x); };
    }
    return [model](const Eigen::RowVectorXd& x) {
        return static_cast<double>(predict_class(*model, x));
    };
}

}  // namespace

Method make_method(MethodId id, const RsslConfig& rssl_base, const ForestConfig& forest_base) {
    Method method;
    method.id = method_name(id);
    switch (id) {
        case MethodId::kSingleBase:
            method.stream_tag = kTagSingle;
            method.fit = [fit = rssl_base.fit](const Dataset& train, std::uint64_t, const
                                               std::vector<std::uint64_t>&, int) {
                return fit_single_base(train, fit);
            };
            break;
        case MethodId::kUniformRssl:
        case MethodId::kAdaptiveCorrelation:
        case MethodId::kAdaptiveFStat: {
            method.stream_tag = id == MethodId::kUniformRssl ? kTagUniform
                              : id == MethodId::kAdaptiveCorrelation ? kTagAdaptiveCorr
                                                                     : kTagAdaptiveFstat;
            WeightScheme scheme = id == MethodId::kUniformRssl ? WeightScheme::kUniform
                                : id == MethodId::kAdaptiveCorrelation ? WeightScheme::kCorrelation
                                                                       : WeightScheme::kFStatistic;
            method.fit = [rssl_base, scheme](const Dataset& train, std::uint64_t seed,
                                             const std::vector<std::uint64_t>& prefix, int threads) {
                RsslConfig config = rssl_base;
                config.task = train.task;
                config.weighting = scheme;
                config.seed = seed;
                config.stream_prefix = prefix;
                config.threads = threads;
                return fit_rssl_method(train, config);
            };
            break;
        }
        case MethodId::kRandomForest:
            method.stream_tag = kTagForest;
            method.fit = [forest_base](const Dataset& train, std::uint64_t seed,
                                       const std::vector<std::uint64_t>& prefix, int threads) {
                ForestConfig config = forest_base;
                config.seed = seed;
                config.stream_prefix = prefix;
                config.threads = threads;
                auto model = std::make_shared<ForestModel>(fit_forest(train, config));
                return Predictor(
                    [model](const Eigen::RowVectorXd& x) { return predict_forest(*model, x); });
            };
            break;
    }
    return method;
}

double mse(const std::vector<double>& predictions, const std::vector<double>& truth) {
    if (predictions.empty() || predictions.size() != truth.size()) {
        throw std::invalid_argument("mse: size mismatch or empty input");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const double d = predictions[i] - truth[i];
        sum += d * d;
    }
    return sum / static_cast<double>(predictions.size());
}

double mcr(const std::vector<double>& predictions, const std::vector<double>& truth) {
    if (predictions.empty() || predictions.size() != truth.size()) {
        throw std::invalid_argument("mcr: size mismatch or empty input");
    }
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        wrong += predictions[i] != truth[i] ? 1 : 0;
    }
    return static_cast<double>(wrong) / static_cast<double>(predictions.size());
}

namespace {

double evaluate_loss(const Predictor& predict, const Dataset& test) {
    std::vector<double> preds(test.rows());
    std::vector<double> truth(test.rows());
    for (Eigen::Index i = 0; i < test.rows(); ++i) {
        preds[static_cast<std::size_t>(i)] = predict(test.features.row(i));
        truth[static_cast<std::size_t>(i)] = test.target[i];
    }
    return test.task == Task::kRegression ? mse(preds, truth) : mcr(preds, truth);
}

void finalize_stats(BenchmarkReport& report) {
    for (auto& mr : report.methods) {
        const auto r = static_cast<double>(mr.losses.size());
        double mean = 0.0;
        for (double v : mr.losses) {
            mean += v;
        }
        mean /= r;
        double var = 0.0;
        if (mr.losses.size() > 1) {
            for (double v : mr.losses) {
                var += (v - mean) * (v - mean);
            }
            var /= r - 1.0;
        }
        mr.mean_loss = mean;
        mr.std_loss = std::sqrt(var);
    }

    // Better means: every adaptive RSSL mean beats the random-forest mean.
    const MethodResult* rf = nullptr;
    std::vector<const MethodResult*> adaptive;
    for (const auto& mr : report.methods) {
        if (mr.method == method_name(MethodId::kRandomForest)) {
            rf = &mr;
        } else if (mr.method == method_name(MethodId::kAdaptiveCorrelation) ||
                   mr.method == method_name(MethodId::kAdaptiveFStat)) {
            adaptive.push_back(&mr);
        }
    }
    if (rf != nullptr && !adaptive.empty()) {
        bool better = true;
        for (const auto* a : adaptive) {
            better = better && a->mean_loss < rf->mean_loss;
        }
        report.better_flag = better;
    }
}

// Shared replication loop: `make_data` yields the (train, test) pair for one
// replication; every method sees the identical pair.
BenchmarkReport run_protocol(
    const std::vector<Method>& methods, int replications, std::uint64_t seed, int threads,
    const std::function<std::pair<Dataset, Dataset>(std::uint64_t r)>& make_data) {
    if (replications < 1) {
        throw ConfigError("replications must be >= 1");
    }
    if (methods.empty()) {
        throw ConfigError("no methods requested");
    }

    std::vector<std::vector<double>> losses(methods.size(),
                                            std::vector<double>(replications, 0.0));
    parallel_for(static_cast<std::size_t>(replications), threads, [&](std::size_t rep) {
        const auto r = static_cast<std::uint64_t>(rep);
        // Parallelism lives at the replication level; a single replication may
        // instead fan out inside the method fits. Either way the per-member
        // streams make the result identical to a sequential run.
        const int inner_threads = replications == 1 ? threads : 1;
        const auto [train, test] = make_data(r);
        for (std::size_t m = 0; m < methods.size(); ++m) {
            const Predictor predictor =
                methods[m].fit(train, seed, {r, methods[m].stream_tag}, inner_threads);
            losses[m][rep] = evaluate_loss(predictor, test);
        }
    });

    BenchmarkReport report;
    report.replications = replications;
    report.seed = seed;
    for (std::size_t m = 0; m < methods.size(); ++m) {
        MethodResult mr;
        mr.method = methods[m].id;
        mr.losses = std::move(losses[m]);
        report.methods.push_back(std::move(mr));
    }
    finalize_stats(report);
    return report;
}

}  // namespace

BenchmarkReport avte(const Dataset& data, const std::vector<Method>& methods,
                     const EvalProtocol& protocol, std::uint64_t seed, int threads) {
    validate(data);
    BenchmarkReport report = run_protocol(
        methods, protocol.replications, seed, threads, [&](std::uint64_t r) {
            RngStream rng = RngStream::derive(seed, {r, kPurposeSplit});
            const TrainTestSplit s = split(data, protocol.train_fraction, rng);
            return std::make_pair(take_rows(data, s.train_indices), take_rows(data, s.test_indices));
        });
    report.task = data.task;
    report.train_fraction = protocol.train_fraction;
    return report;
}

BenchmarkReport avte(const ScenarioConfig& scenario, const std::vector<Method>& methods,
                     int replications, std::uint64_t seed, int threads) {
    BenchmarkReport report =
        run_protocol(methods, replications, seed, threads, [&](std::uint64_t r) {
            ScenarioConfig rep_config = scenario;
            rep_config.seed = seed;
            rep_config.stream_prefix.push_back(r);
            return generate(rep_config);
        });
    report.task = scenario.task;
    report.source_id = scenario_name(scenario);
    return report;
}

std::vector<SweepPoint> rho_sweep(const ScenarioConfig& base, const std::vector<double>& rhos,
                                  const std::vector<Method>& methods, int replications,
                                  std::uint64_t seed, int threads) {
    if (rhos.empty()) {
        throw ConfigError("rho sweep needs at least one rho");
    }
    std::vector<SweepPoint> points;
    points.reserve(rhos.size());
    for (double rho : rhos) {
        ScenarioConfig config = base;
        config.rho = rho;
        SweepPoint point;
        point.rho = rho;
        point.report = avte(config, methods, replications, seed, threads);
        points.push_back(std::move(point));
    }
    return points;
}

}  // namespace rssl
