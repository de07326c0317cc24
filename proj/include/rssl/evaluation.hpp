#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rssl/dataset.hpp"
#include "rssl/ensemble.hpp"
#include "rssl/forest.hpp"
#include "rssl/synthetic.hpp"

namespace rssl {

enum class MethodId {
    kSingleBase,
    kUniformRssl,
    kAdaptiveCorrelation,
    kAdaptiveFStat,
    kRandomForest,
};

std::string method_name(MethodId id);
MethodId parse_method(const std::string& name);
const std::vector<MethodId>& all_methods();

/// A fitted model reduced to its prediction function: regression value, or
/// class id for classification.
using Predictor = std::function<double(const Eigen::RowVectorXd&)>;

/// One competitor in a benchmark. `fit` receives the training data, the master
/// seed, and a stream prefix (replication, method tag) so that results do not
/// depend on method order or thread count. Plain structs so tests can inject
/// stubs and oracles.
struct Method {
    std::string id;
    std::uint64_t stream_tag = 0;
    std::function<Predictor(const Dataset& train, std::uint64_t seed,
                            const std::vector<std::uint64_t>& prefix, int threads)>
        fit;
};

Method make_method(MethodId id, const RsslConfig& rssl_base, const ForestConfig& forest_base);

double mse(const std::vector<double>& predictions, const std::vector<double>& truth);
double mcr(const std::vector<double>& predictions, const std::vector<double>& truth);

struct MethodResult {
    std::string method;
    double mean_loss = 0.0;
    double std_loss = 0.0;           // sample std, divisor R-1; 0 when R = 1
    std::vector<double> losses;      // per replication
};

struct BenchmarkReport {
    std::vector<MethodResult> methods;
    int replications = 0;
    std::uint64_t seed = 0;
    Task task = Task::kRegression;
    std::string source_id;                  // dataset path or scenario name
    std::optional<double> train_fraction;   // real-data protocol only
    std::optional<bool> better_flag;        // every adaptive mean < the RF mean
};

struct EvalProtocol {
    int replications = 100;
    double train_fraction = 0.7;
};

/// Replicated-split protocol on a fixed dataset: per replication draw a fresh
/// (stratified) split, train every method on the identical training rows, and
/// score the task loss on the identical test rows.
BenchmarkReport avte(const Dataset& data, const std::vector<Method>& methods,
                     const EvalProtocol& protocol, std::uint64_t seed, int threads = 1);

/// Synthetic protocol: per replication generate fresh train and test sets from
/// the scenario under replication-labeled streams.
BenchmarkReport avte(const ScenarioConfig& scenario, const std::vector<Method>& methods,
                     int replications, std::uint64_t seed, int threads = 1);

struct SweepPoint {
    double rho = 0.0;
    BenchmarkReport report;
};

/// One avte run per rho, the scenario's correlation overridden in place.
std::vector<SweepPoint> rho_sweep(const ScenarioConfig& base, const std::vector<double>& rhos,
                                  const std::vector<Method>& methods, int replications,
                                  std::uint64_t seed, int threads = 1);

}  // namespace rssl
