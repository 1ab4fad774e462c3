#pragma once

#include <stdexcept>
#include <string>

#include "ionspin/drive.hpp"
#include "ionspin/pair.hpp"
#include "ionspin/units.hpp"

namespace ionspin::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key = value configuration; every field starts at the default
// parameter set and scenario used throughout.
struct RunConfig {
    MaterialParams material = mn_gaas_params;

    double theta_deg = 0.0;
    double theta_min_deg = -180.0;
    double theta_max_deg = 180.0;
    double e_dc = 1.0e7;   // V/m
    double e_ac = 2.5e6;   // V/m
    DriveDirection drive_direction = DriveDirection::along_110;
    double drive_omega_hz = 0.0;   // 0 = resonant with the xi2-xi1 splitting
    double drive_phase_rad = 0.0;
    double duration_s = -1.0;      // negative = subcommand default
    double dt_s = 0.0;             // 0 = resolution rule
    double temperature_k = 0.5;
    double background_fraction = 0.1;
    double d_min_m = 1.2e-9;
    double d_max_m = 1.0e-8;
    PairModel pair_model;
    double degeneracy_tol_ev = 1e-9;
    int grid_points = 721;
    std::string output_path;
};

// Parses the documented key = value format ('#' starts a comment).
// Unknown keys and out-of-range values raise ConfigError naming the
// offending key and the violated bound.
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

}  // namespace ionspin::cli
