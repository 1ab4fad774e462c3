#include "ionspin/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace ionspin::cli {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    char* end = nullptr;
    double x = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || !std::isfinite(x))
        throw ConfigError("config: key '" + key + "' needs a finite number, got '" +
                          value + "'");
    return x;
}

struct Bound {
    double lo, hi;
    bool lo_open, hi_open;

    bool contains(double x) const {
        if (lo_open ? x <= lo : x < lo) return false;
        if (hi_open ? x >= hi : x > hi) return false;
        return true;
    }
    std::string describe() const {
        std::ostringstream s;
        s << (lo_open ? '(' : '[') << lo << ", " << hi << (hi_open ? ')' : ']');
        return s.str();
    }
};

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

Setter numeric(double RunConfig::* field, Bound bound) {
    return [field, bound](RunConfig& c, const std::string& key,
                          const std::string& value) {
        double x = parse_double(key, value);
        if (!bound.contains(x))
            throw ConfigError("config: " + key + " = " + value +
                              " out of range " + bound.describe());
        c.*field = x;
    };
}

Setter material_field(double MaterialParams::* field, Bound bound) {
    return [field, bound](RunConfig& c, const std::string& key,
                          const std::string& value) {
        double x = parse_double(key, value);
        if (!bound.contains(x))
            throw ConfigError("config: " + key + " = " + value +
                              " out of range " + bound.describe());
        c.material.*field = x;
    };
}

Setter pair_field(double PairModel::* field, Bound bound) {
    return [field, bound](RunConfig& c, const std::string& key,
                          const std::string& value) {
        double x = parse_double(key, value);
        if (!bound.contains(x))
            throw ConfigError("config: " + key + " = " + value +
                              " out of range " + bound.describe());
        c.pair_model.*field = x;
    };
}

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"gamma_dipole", material_field(&MaterialParams::gamma_dipole,
                                        {0.0, 1e-25, true, false})},
        {"alpha_ev", material_field(&MaterialParams::alpha, {-10.0, 10.0, false, false})},
        {"beta_ev", material_field(&MaterialParams::beta, {-10.0, 10.0, false, false})},
        {"g_factor", material_field(&MaterialParams::g_factor, {0.0, 100.0, true, true})},
        {"hole_radius_m",
         material_field(&MaterialParams::hole_radius, {0.0, 1e-6, true, false})},
        {"theta_deg", numeric(&RunConfig::theta_deg, {-1e4, 1e4, false, false})},
        {"theta_min_deg", numeric(&RunConfig::theta_min_deg, {-1e4, 1e4, false, false})},
        {"theta_max_deg", numeric(&RunConfig::theta_max_deg, {-1e4, 1e4, false, false})},
        {"e_dc_v_per_m", numeric(&RunConfig::e_dc, {0.0, 1e9, false, false})},
        {"e_ac_v_per_m", numeric(&RunConfig::e_ac, {0.0, 1e9, false, false})},
        {"drive_omega_hz", numeric(&RunConfig::drive_omega_hz, {0.0, 1e15, false, false})},
        {"drive_phase_rad",
         numeric(&RunConfig::drive_phase_rad, {-100.0, 100.0, false, false})},
        {"duration_s", numeric(&RunConfig::duration_s, {0.0, 1.0, false, false})},
        {"dt_s", numeric(&RunConfig::dt_s, {0.0, 1.0, false, false})},
        {"temperature_k", numeric(&RunConfig::temperature_k, {0.0, 1e4, true, false})},
        {"background_fraction",
         numeric(&RunConfig::background_fraction, {0.0, 1.0, false, true})},
        {"d_min_m", numeric(&RunConfig::d_min_m, {0.0, 1e-3, true, false})},
        {"d_max_m", numeric(&RunConfig::d_max_m, {0.0, 1e-3, true, false})},
        {"j0_ev", pair_field(&PairModel::j0, {0.0, 10.0, true, false})},
        {"d0_m", pair_field(&PairModel::d0, {0.0, 1e-3, true, false})},
        {"decay_length_m",
         pair_field(&PairModel::decay_length, {0.0, 1e-3, true, false})},
        {"degeneracy_tol_ev",
         numeric(&RunConfig::degeneracy_tol_ev, {0.0, 1e-3, true, false})},
        {"grid_points",
         [](RunConfig& c, const std::string& key, const std::string& value) {
             double x = parse_double(key, value);
             if (x < 2 || x > 1e7 || x != std::floor(x))
                 throw ConfigError("config: " + key + " = " + value +
                                   " must be an integer in [2, 1e7]");
             c.grid_points = static_cast<int>(x);
         }},
        {"drive_direction",
         [](RunConfig& c, const std::string& key, const std::string& value) {
             if (value == "110")
                 c.drive_direction = DriveDirection::along_110;
             else if (value == "001")
                 c.drive_direction = DriveDirection::along_001;
             else
                 throw ConfigError("config: " + key + " must be 110 or 001, got '" +
                                   value + "'");
         }},
        {"output_path",
         [](RunConfig& c, const std::string&, const std::string& value) {
             c.output_path = value;
         }},
    };
    return table;
}

std::string valid_keys() {
    std::string out;
    for (const auto& [key, _] : setters()) {
        if (!out.empty()) out += ", ";
        out += key;
    }
    return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig config;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(line_no) +
                              " is not of the form key = value: '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        auto it = setters().find(key);
        if (it == setters().end())
            throw ConfigError("config: unknown key '" + key +
                              "'; valid keys: " + valid_keys());
        it->second(config, key, value);
    }
    return config;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream text;
    text << file.rdbuf();
    return parse_config(text.str());
}

}  // namespace ionspin::cli
