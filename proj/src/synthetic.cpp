#include "rssl/synthetic.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "rssl/errors.hpp"
#include "rssl/learners.hpp"
#include "rssl/rng.hpp"

namespace rssl {

Eigen::Index resolve_k_true(const ScenarioConfig& config) {
    if (config.k_true > 0) {
        if (config.k_true > config.p) {
            throw ConfigError("k_true exceeds p");
        }
        return config.k_true;
    }
    return std::min<Eigen::Index>(10, config.p);
}

Eigen::VectorXd true_beta(const ScenarioConfig& config) {
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(config.p);
    beta.head(resolve_k_true(config)).setOnes();
    return beta;
}

namespace {

void check_config(const ScenarioConfig& config) {
    if (config.n < 1 || config.p < 1 || config.test_size < 1) {
        throw ConfigError("scenario sizes must be >= 1");
    }
    if (!(config.rho >= 0.0 && config.rho < 1.0)) {
        throw ConfigError("rho must lie in [0, 1)");
    }
    if (!(config.noise_sd > 0.0)) {
        throw ConfigError("noise_sd must be positive");
    }
}

bool has_both_classes(const Eigen::VectorXd& y) {
    bool seen0 = false, seen1 = false;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        (y[i] == 1.0 ? seen1 : seen0) = true;
    }
    return seen0 && seen1;
}

// Draw order per row: shared factor, then the p idiosyncratic normals, then
// the noise/label draw — so a part is one self-contained stream.
Dataset draw_part(const ScenarioConfig& config, const Eigen::VectorXd& beta, Eigen::Index rows,
                  std::uint64_t part) {
    const double sr = std::sqrt(config.rho);
    const double si = std::sqrt(1.0 - config.rho);

    Dataset ds;
    ds.task = config.task;
    ds.feature_names.reserve(config.p);
    for (Eigen::Index j = 0; j < config.p; ++j) {
        ds.feature_names.push_back("x" + std::to_string(j + 1));
    }

    for (std::uint64_t attempt = 0; attempt < 20; ++attempt) {
        std::vector<std::uint64_t> label = config.stream_prefix;
        label.insert(label.end(), {part, attempt, kPurposeGenerate});
        RngStream rng = RngStream::derive(config.seed, label);

        ds.features.resize(rows, config.p);
        ds.target.resize(rows);
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double z0 = rng.next_gaussian();
            for (Eigen::Index j = 0; j < config.p; ++j) {
                ds.features(i, j) = sr * z0 + si * rng.next_gaussian();
            }
            const double signal = ds.features.row(i).dot(beta);
            if (config.task == Task::kRegression) {
                ds.target[i] = signal + config.noise_sd * rng.next_gaussian();
            } else {
                ds.target[i] = rng.next_uniform() < sigmoid(signal) ? 1.0 : 0.0;
            }
        }
        if (config.task == Task::kRegression || rows < 2 || has_both_classes(ds.target)) {
            return ds;
        }
    }
    throw NumericError("synthetic generation produced a single class in 20 attempts");
}

}  // namespace

std::pair<Dataset, Dataset> generate(const ScenarioConfig& config) {
    check_config(config);
    const Eigen::VectorXd beta = true_beta(config);
    Dataset train = draw_part(config, beta, config.n, 0);
    Dataset test = draw_part(config, beta, config.test_size, 1);
    return {std::move(train), std::move(test)};
}

std::vector<ScenarioConfig> scenario_grid(std::uint64_t seed) {
    struct Row {
        Eigen::Index n, p;
        double rho;
    };
    static const Row regression_rows[] = {
        {200, 25, 0.05}, {200, 25, 0.5}, {25, 200, 0.05},
        {25, 200, 0.5},  {50, 1000, 0.05}, {1000, 50, 0.05},
    };
    static const Row classification_rows[] = {
        {200, 25, 0.05}, {200, 25, 0.5}, {50, 200, 0.05},
        {50, 200, 0.5},  {50, 1000, 0.05}, {1000, 50, 0.05},
    };

    std::vector<ScenarioConfig> grid;
    for (const Row& r : regression_rows) {
        ScenarioConfig c;
        c.n = r.n;
        c.p = r.p;
        c.rho = r.rho;
        c.task = Task::kRegression;
        c.seed = seed;
        grid.push_back(c);
    }
    for (const Row& r : classification_rows) {
        ScenarioConfig c;
        c.n = r.n;
        c.p = r.p;
        c.rho = r.rho;
        c.task = Task::kClassification;
        c.seed = seed;
        grid.push_back(c);
    }
    return grid;
}

std::string scenario_name(const ScenarioConfig& config) {
    char rho[32];
    std::snprintf(rho, sizeof(rho), "%g", config.rho);
    return task_name(config.task) + "_n" + std::to_string(config.n) + "_p" +
           std::to_string(config.p) + "_rho" + rho;
}

}  // namespace rssl
