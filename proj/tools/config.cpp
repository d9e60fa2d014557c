// config.cpp — JSON configuration parsing and validation

#include "config.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace gaudin::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& key, const std::string& why) {
    throw ConfigError(key + ": " + why);
}

const json& require(const json& node, const std::string& key, const std::string& scope) {
    const auto it = node.find(key);
    if (it == node.end())
        fail(scope + key, "missing");
    return *it;
}

double number_at(const json& node, const std::string& key, const std::string& scope) {
    const json& value = require(node, key, scope);
    if (!value.is_number())
        fail(scope + key, "expected a number");
    return value.get<double>();
}

Complex complex_of(const json& value, const std::string& key) {
    if (value.is_number())
        return {value.get<double>(), 0.0};
    if (value.is_array() && value.size() == 2 &&
        value[0].is_number() && value[1].is_number())
        return {value[0].get<double>(), value[1].get<double>()};
    fail(key, "expected a number or a [re, im] pair");
}

Complex complex_at(const json& node, const std::string& key, const std::string& scope) {
    return complex_of(require(node, key, scope), scope + key);
}

TCParams parse_tc(const json& params, const std::string& scope) {
    const double omega = number_at(params, "omega", scope);
    const double delta = number_at(params, "delta", scope);
    const double g = number_at(params, "g", scope);
    if (!(omega > 0.0))
        fail(scope + "omega", "must be positive");
    if (g == 0.0)
        fail(scope + "g", "must be nonzero");
    return TCParams(omega, delta, g);
}

GenRepParams parse_gen(const json& params, const std::string& scope) {
    const Complex gamma = complex_at(params, "gamma", scope);
    if (gamma == Complex(0.0, 0.0))
        fail(scope + "gamma", "must be nonzero");
    return GenRepParams(complex_at(params, "alpha1", scope),
                        complex_at(params, "alpha2", scope),
                        complex_at(params, "beta1", scope),
                        complex_at(params, "beta2", scope),
                        complex_at(params, "rho", scope),
                        gamma);
}

} // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path);
    json root;
    try {
        in >> root;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }

    RunConfig config;

    config.model = require(root, "model", "").get<std::string>();
    if (config.model != "tc" && config.model != "gen" && config.model != "inhom")
        fail("model", "must be one of tc, gen, inhom");

    const json& hilbert = require(root, "hilbert", "");
    const double n_max = number_at(hilbert, "n_max", "hilbert.");
    if (n_max < 0 || n_max != static_cast<int>(n_max))
        fail("hilbert.n_max", "must be a non-negative integer");
    config.n_max = static_cast<int>(n_max);
    const json& spins = require(hilbert, "spins", "hilbert.");
    if (!spins.is_array())
        fail("hilbert.spins", "expected an array of spin magnitudes");
    for (const json& s : spins) {
        if (!s.is_number())
            fail("hilbert.spins", "expected numbers");
        config.spins.push_back(s.get<double>());
    }
    try {
        (void)config.space();
    } catch (const std::invalid_argument& e) {
        fail("hilbert.spins", e.what());
    }

    const json& params = require(root, "params", "");
    if (config.model == "tc") {
        config.tc = parse_tc(params, "params.");
    } else if (config.model == "gen") {
        config.gen = parse_gen(params, "params.");
    } else {
        config.inhom_base = require(params, "base", "params.").get<std::string>();
        if (config.inhom_base == "tc")
            config.tc = parse_tc(params, "params.");
        else if (config.inhom_base == "gen")
            config.gen = parse_gen(params, "params.");
        else
            fail("params.base", "must be tc or gen");
        const json& eps = require(params, "epsilons", "params.");
        if (!eps.is_array() || eps.empty())
            fail("params.epsilons", "expected a non-empty array");
        for (const json& e : eps)
            config.epsilons.push_back(complex_of(e, "params.epsilons"));
        if (config.epsilons.size() != config.spins.size())
            fail("params.epsilons", "one entry per spin site is required");
        for (std::size_t i = 0; i < config.epsilons.size(); ++i)
            for (std::size_t j = i + 1; j < config.epsilons.size(); ++j)
                if (std::abs(config.epsilons[i] - config.epsilons[j]) < kPoleExclusion)
                    fail("params.epsilons", "entries must be pairwise distinct");
    }
    if (params.contains("kappa"))
        config.kappa = complex_of(params["kappa"], "params.kappa");

    const json& verify = require(root, "verify", "");
    config.tolerance = number_at(verify, "tolerance", "verify.");
    if (!(config.tolerance > 0.0))
        fail("verify.tolerance", "must be positive");
    const json& seed = require(verify, "seed", "verify.");
    if (!seed.is_number_unsigned())
        fail("verify.seed", "must be a non-negative integer");
    config.seed = seed.get<std::uint64_t>();
    const double samples = number_at(verify, "samples", "verify.");
    if (samples < 1 || samples != static_cast<int>(samples))
        fail("verify.samples", "must be a positive integer");
    config.samples = static_cast<int>(samples);
    if (verify.contains("inject_failure")) {
        if (!verify["inject_failure"].is_boolean())
            fail("verify.inject_failure", "must be a boolean");
        config.inject_failure = verify["inject_failure"].get<bool>();
    }

    const json& output = require(root, "output", "");
    config.out_path = require(output, "path", "output.").get<std::string>();
    if (config.out_path.empty())
        fail("output.path", "must not be empty");
    config.format = require(output, "format", "output.").get<std::string>();
    if (config.format != "json" && config.format != "csv")
        fail("output.format", "must be json or csv");

    if (root.contains("max_dimension")) {
        const double cap = root["max_dimension"].get<double>();
        if (cap < 1 || cap != static_cast<Eigen::Index>(cap))
            fail("max_dimension", "must be a positive integer");
        config.max_dimension = static_cast<Eigen::Index>(cap);
    }
    if (root.contains("lowest_k")) {
        const double k = root["lowest_k"].get<double>();
        if (k < 1 || k != static_cast<int>(k))
            fail("lowest_k", "must be a positive integer");
        config.lowest_k = static_cast<int>(k);
    }

    if (root.contains("sweep")) {
        const json& sweep = root["sweep"];
        if (!sweep.is_object())
            fail("sweep", "expected an object of parameter axes");
        static const char* axis_order[] = {"alpha1", "alpha2", "beta1", "beta2",
                                           "rho", "gamma", "kappa"};
        for (const auto& item : sweep.items()) {
            bool known = false;
            for (const char* name : axis_order)
                known = known || item.key() == name;
            if (!known)
                fail("sweep." + item.key(), "unknown axis");
        }
        for (const char* name : axis_order) {
            if (!sweep.contains(name))
                continue;
            const json& axis = sweep[name];
            if (!axis.is_array() || axis.empty())
                fail(std::string("sweep.") + name, "expected a non-empty array");
            std::vector<Complex> values;
            for (const json& v : axis) {
                const Complex z = complex_of(v, std::string("sweep.") + name);
                if (std::string(name) == "gamma" && z == Complex(0.0, 0.0))
                    fail("sweep.gamma", "must be nonzero");
                values.push_back(z);
            }
            config.sweep_axes.emplace_back(name, std::move(values));
        }
    }

    return config;
}

LaxFamily build_family(const RunConfig& config) {
    const SpaceSpec space = config.space();

    LaxFamily family = [&] {
        if (config.model == "tc")
            return tc_representation(space, *config.tc);
        if (config.model == "gen")
            return gen_representation(space, *config.gen);
        if (config.inhom_base == "tc")
            return inhom_representation(space, InhomSpec(*config.tc, config.epsilons));
        return inhom_representation(space, InhomSpec(*config.gen, config.epsilons));
    }();

    if (!config.inject_failure)
        return family;

    // Test hook: scale the B entry so every identity check fails.
    auto a = [family](Complex l) { return family.entry_a(l); };
    auto b = [family](Complex l) { return 1.1 * family.entry_b(l); };
    auto c = [family](Complex l) { return family.entry_c(l); };
    return LaxFamily(space, a, b, c, family.poles(), family.degree_bound());
}

} // namespace gaudin::cli
