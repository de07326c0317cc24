#include "options.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>

#include "rssl/errors.hpp"

namespace rssl::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
    T out{};
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc() || res.ptr != last) {
        throw ConfigError("config key '" + key + "': bad value '" + value + "'");
    }
    return out;
}

// "auto" maps to the sentinel 0 used throughout the option structs.
template <typename T>
T parse_count_or_auto(const std::string& key, const std::string& value) {
    if (value == "auto") {
        return 0;
    }
    const T v = parse_number<T>(key, value);
    if (v <= 0) {
        throw ConfigError("config key '" + key + "': must be positive or 'auto'");
    }
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no") {
        return false;
    }
    throw ConfigError("config key '" + key + "': bad boolean '" + value + "'");
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::string cur;
    for (char c : value) {
        if (c == ',') {
            out.push_back(parse_number<double>(key, trim(cur)));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!trim(cur).empty()) {
        out.push_back(parse_number<double>(key, trim(cur)));
    }
    return out;
}

}  // namespace

void apply_config_file(const std::string& path, Options& opts) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }

    const std::map<std::string, std::function<void(const std::string&, const std::string&)>>
        schema = {
            {"seed", [&](const std::string& k, const std::string& v) { opts.seed = parse_number<std::uint64_t>(k, v); }},
            {"threads", [&](const std::string& k, const std::string& v) { opts.threads = parse_number<int>(k, v); }},
            {"out", [&](const std::string&, const std::string& v) { opts.out = v; }},
            {"learners", [&](const std::string& k, const std::string& v) { opts.learners = parse_number<int>(k, v); }},
            {"subset_size", [&](const std::string& k, const std::string& v) { opts.subset_size = parse_count_or_auto<int>(k, v); }},
            {"weighting", [&](const std::string&, const std::string& v) { opts.weighting = v; }},
            {"fit.ridge_jitter", [&](const std::string& k, const std::string& v) { opts.ridge_jitter = parse_number<double>(k, v); }},
            {"fit.max_iter", [&](const std::string& k, const std::string& v) { opts.max_iter = parse_number<int>(k, v); }},
            {"fit.tol", [&](const std::string& k, const std::string& v) { opts.tol = parse_number<double>(k, v); }},
            {"fit.svd_rcond", [&](const std::string& k, const std::string& v) { opts.svd_rcond = parse_number<double>(k, v); }},
            {"forest.trees", [&](const std::string& k, const std::string& v) { opts.trees = parse_number<int>(k, v); }},
            {"forest.mtry", [&](const std::string& k, const std::string& v) { opts.mtry = parse_count_or_auto<int>(k, v); }},
            {"forest.min_leaf", [&](const std::string& k, const std::string& v) { opts.min_leaf = parse_count_or_auto<int>(k, v); }},
            {"forest.max_depth", [&](const std::string& k, const std::string& v) { opts.max_depth = parse_number<int>(k, v); }},
            {"replications", [&](const std::string& k, const std::string& v) { opts.replications = parse_number<int>(k, v); }},
            {"split", [&](const std::string& k, const std::string& v) { opts.split_fraction = parse_number<double>(k, v); }},
            {"test_size", [&](const std::string& k, const std::string& v) { opts.test_size = parse_number<std::int64_t>(k, v); }},
            {"k_true", [&](const std::string& k, const std::string& v) { opts.k_true = parse_count_or_auto<std::int64_t>(k, v); }},
            {"noise_sd", [&](const std::string& k, const std::string& v) { opts.noise_sd = parse_number<double>(k, v); }},
            {"data", [&](const std::string&, const std::string& v) { opts.data = v; }},
            {"target", [&](const std::string&, const std::string& v) { opts.target = v; }},
            {"task", [&](const std::string&, const std::string& v) { opts.task = v; }},
            {"n", [&](const std::string& k, const std::string& v) { opts.n = parse_number<std::int64_t>(k, v); }},
            {"p", [&](const std::string& k, const std::string& v) { opts.p = parse_number<std::int64_t>(k, v); }},
            {"rho", [&](const std::string& k, const std::string& v) { opts.rho = parse_number<double>(k, v); }},
            {"rhos", [&](const std::string& k, const std::string& v) { opts.rhos = parse_double_list(k, v); }},
            {"grid", [&](const std::string& k, const std::string& v) { opts.grid = parse_bool(k, v); }},
            {"methods", [&](const std::string&, const std::string& v) { opts.methods = v; }},
            {"input", [&](const std::string&, const std::string& v) { opts.input = v; }},
            {"format", [&](const std::string&, const std::string& v) { opts.format = v; }},
            {"log_scale", [&](const std::string& k, const std::string& v) { opts.log_scale = parse_bool(k, v); }},
        };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        const std::string body = trim(line);
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        const auto it = schema.find(key);
        if (it == schema.end()) {
            throw ConfigError("unknown config key '" + key + "'");
        }
        it->second(key, value);
    }
}

void apply_env_seed(Options& opts) {
    const char* env = std::getenv("RSSL_SEED");
    if (env == nullptr || *env == '\0') {
        return;
    }
    opts.seed = parse_number<std::uint64_t>("RSSL_SEED", env);
}

}  // namespace rssl::cli
