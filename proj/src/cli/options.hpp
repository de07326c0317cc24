#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rssl::cli {

/// Effective settings for one invocation. Precedence: built-in defaults, then
/// the RSSL_SEED environment variable, then the config file, then flags.
struct Options {
    // global
    std::uint64_t seed = 0;
    int threads = 1;
    std::string out = ".";

    // ensemble
    int learners = 450;
    int subset_size = 0;  // 0 = auto
    std::string weighting;  // empty = command default

    // base-learner fitting
    double ridge_jitter = 1e-6;
    int max_iter = 100;
    double tol = 1e-8;
    double svd_rcond = 1e-10;

    // forest baseline
    int trees = 450;
    int mtry = 0;      // 0 = auto
    int min_leaf = 0;  // 0 = auto
    int max_depth = 30;

    // protocol
    int replications = 100;
    double split_fraction = 0.7;
    std::int64_t test_size = 1000;
    std::int64_t k_true = 0;  // 0 = auto
    double noise_sd = 1.0;

    // data source
    std::string data;
    std::string target;
    std::string task;  // "regression" | "classification" | ""
    std::int64_t n = 0;
    std::int64_t p = 0;
    std::optional<double> rho;
    std::vector<double> rhos;
    bool grid = false;

    // bench/report
    std::string methods;  // comma list; empty = all
    std::string input;
    std::string format = "all";
    bool log_scale = false;
};

/// Parses a flat `key = value` config file (# comments) into `opts`. Unknown
/// keys are errors; the closed schema mirrors the flag set.
void apply_config_file(const std::string& path, Options& opts);

/// Applies the RSSL_SEED environment variable, when set and numeric.
void apply_env_seed(Options& opts);

}  // namespace rssl::cli
