// config.hpp — Run configuration parsed from JSON

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaudin/models.hpp"

namespace gaudin::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string model;                  // tc | gen | inhom
    int n_max = 0;
    std::vector<double> spins;

    std::optional<TCParams> tc;
    std::optional<GenRepParams> gen;
    std::string inhom_base;             // tc | gen (inhom model only)
    std::vector<Complex> epsilons;
    Complex kappa{1.0, 0.0};

    double tolerance = 1e-10;
    std::uint64_t seed = 0;
    int samples = 1;
    bool inject_failure = false;        // test hook: perturbs the B entry

    std::string out_path;
    std::string format = "json";        // json | csv

    Eigen::Index max_dimension = 4096;
    int lowest_k = 6;

    // sweep axes in canonical order (alpha1..gamma, kappa); empty when absent
    std::vector<std::pair<std::string, std::vector<Complex>>> sweep_axes;

    SpaceSpec space() const { return SpaceSpec(n_max, spins); }
};

RunConfig load_config(const std::string& path);

// Model construction shared by the commands.
LaxFamily build_family(const RunConfig& config);

} // namespace gaudin::cli
