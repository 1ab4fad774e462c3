#include "ionspin/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "ionspin/drive.hpp"
#include "ionspin/dynamics.hpp"
#include "ionspin/multiplet.hpp"
#include "ionspin/pair.hpp"
#include "ionspin/protocol.hpp"
#include "ionspin/stark.hpp"

namespace ionspin::cli {

namespace {

using std::numbers::pi;

std::string fmt(double x) {
    if (x == 0.0) x = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::vector<double> theta_grid(const RunConfig& config) {
    if (config.grid_points < 2)
        throw ConfigError("config: grid_points must be at least 2 for sweeps");
    if (!(config.theta_max_deg > config.theta_min_deg))
        throw ConfigError("config: theta_max_deg must exceed theta_min_deg");
    double lo = config.theta_min_deg * pi / 180.0;
    double hi = config.theta_max_deg * pi / 180.0;
    std::vector<double> grid(config.grid_points);
    for (int i = 0; i < config.grid_points; ++i)
        grid[i] = lo + (hi - lo) * i / (config.grid_points - 1);
    return grid;
}

double theta_rad(const RunConfig& config) { return config.theta_deg * pi / 180.0; }

DriveSpec make_drive(const RunConfig& config, const FieldSpec& dc) {
    double omega = config.drive_omega_hz > 0.0
                       ? 2.0 * pi * config.drive_omega_hz
                       : resonant_omega(dc, config.material.gamma_dipole);
    return DriveSpec(config.e_ac, config.drive_direction, omega,
                     config.drive_phase_rad);
}

// Fallback when the resonant transfer rate vanishes (cos(2 Theta) = 0).
double auto_duration(const RunConfig& config, const FieldSpec& dc, double omega) {
    if (config.duration_s >= 0.0) return config.duration_s;
    double rabi = resonant_rabi_frequency(config.e_ac, dc.theta(),
                                          config.material.gamma_dipole);
    if (rabi > 1e-3 * omega) return 3.0 * pi / rabi;  // three population cycles
    return 200.0 * pi / omega;
}

}  // namespace

std::string render_multiplet_csv(const RunConfig& config) {
    Eigen::MatrixXcd h =
        build_spin_hamiltonian(config.material.alpha, config.material.beta);
    MultipletResult result = analyze_multiplet(h, config.degeneracy_tol_ev);

    std::string csv = "energy_eV,multiplicity,J_assigned\n";
    for (const auto& cluster : result.clusters)
        csv += fmt(cluster.energy) + "," + std::to_string(cluster.multiplicity) +
               "," + fmt(cluster.j_assigned) + "\n";
    return csv;
}

std::string render_spectrum_sweep_csv(const RunConfig& config) {
    std::string csv = "theta_rad,xi1,xi2,xi3,Theta_rad,eta\n";
    for (double theta : theta_grid(config)) {
        StarkSpectrum s = numeric_spectrum(field_in_cleavage_plane(theta, config.e_dc),
                                           config.material.gamma_dipole);
        csv += fmt(theta) + "," + fmt(s.xi[0]) + "," + fmt(s.xi[1]) + "," +
               fmt(s.xi[2]) + "," + fmt(s.theta_mix) + "," + fmt(s.eta) + "\n";
    }
    return csv;
}

std::string render_coupling_sweep_csv(const RunConfig& config) {
    std::string csv = "theta_rad,cos2Theta,sin2Theta,resonant_rabi_hz\n";
    for (double theta : theta_grid(config)) {
        double theta_mix = analytic_spectrum(theta).theta_mix;
        double rabi_hz = resonant_rabi_frequency(config.e_ac, theta,
                                                 config.material.gamma_dipole) /
                         (2.0 * pi);
        csv += fmt(theta) + "," + fmt(std::cos(2.0 * theta_mix)) + "," +
               fmt(std::sin(2.0 * theta_mix)) + "," + fmt(rabi_hz) + "\n";
    }
    return csv;
}

namespace {

std::string trace_csv(const EvolutionTrace& trace) {
    std::string csv = "t_s,p_xi1,p_xi2,p_xi3\n";
    for (size_t i = 0; i < trace.times.size(); ++i) {
        const auto& p = trace.populations[i];
        csv += fmt(trace.times[i]) + "," + fmt(p[0]) + "," + fmt(p[1]) + "," +
               fmt(p[2]) + "\n";
    }
    return csv;
}

}  // namespace

std::string render_rabi_csv(const RunConfig& config) {
    FieldSpec dc = field_in_cleavage_plane(theta_rad(config), config.e_dc);
    DriveSpec drive = make_drive(config, dc);
    double duration = auto_duration(config, dc, drive.omega);
    double splitting = pseudospin_splitting(dc.magnitude, dc.theta(),
                                            config.material.gamma_dipole);
    double dt = config.dt_s > 0.0 ? config.dt_s : default_dt(drive.omega, splitting);

    StarkSpectrum spectrum = numeric_spectrum(dc, config.material.gamma_dipole);
    Eigen::Vector3cd initial = spectrum.eigvecs[0].cast<std::complex<double>>();
    EvolutionTrace trace = propagate(PulseProgram{dc, drive, duration, dt}, initial,
                                     config.material.gamma_dipole);
    return trace_csv(trace);
}

std::string render_ldos_sweep_csv(const RunConfig& config) {
    double bg = config.background_fraction;
    std::string csv = "theta_rad,w_xi1_scaled,w_xi2_scaled\n";
    for (double theta : theta_grid(config)) {
        auto [w1, w2] = ldos_weights(analytic_spectrum(theta).theta_mix);
        csv += fmt(theta) + "," + fmt(bg + (1.0 - bg) * w1) + "," +
               fmt(bg + (1.0 - bg) * w2) + "\n";
    }
    return csv;
}

std::string render_pair_csv(const RunConfig& config) {
    if (config.grid_points < 2)
        throw ConfigError("config: grid_points must be at least 2 for sweeps");
    if (!(config.d_max_m > config.d_min_m))
        throw ConfigError("config: d_max_m must exceed d_min_m");

    std::string csv = "d_m,j_ev,t_entangle_s\n";
    for (int i = 0; i < config.grid_points; ++i) {
        double d = config.d_min_m + (config.d_max_m - config.d_min_m) * i /
                                        (config.grid_points - 1);
        double j = exchange_coupling(d, config.pair_model);
        csv += fmt(d) + "," + fmt(j) + "," + fmt(entangling_time(j)) + "\n";
    }
    return csv;
}

std::string render_calibrate_report(const RunConfig& config) {
    FieldSpec dc = field_in_cleavage_plane(theta_rad(config), config.e_dc);
    double omega_seed = config.drive_omega_hz > 0.0
                            ? 2.0 * pi * config.drive_omega_hz
                            : 0.0;
    CalibrationResult result =
        calibrate_pi_pulse(dc, config.drive_direction, config.e_ac,
                           config.material.gamma_dipole, omega_seed);
    std::string report;
    report += "omega_hz = " + fmt(result.omega / (2.0 * pi)) + "\n";
    report += "duration_s = " + fmt(result.duration) + "\n";
    report += "fidelity = " + fmt(result.fidelity) + "\n";
    return report;
}

std::string render_protocol_report(const RunConfig& config,
                                   std::string* per_step_csv) {
    FieldSpec dc = field_in_cleavage_plane(theta_rad(config), config.e_dc);
    DriveSpec drive = make_drive(config, dc);
    double duration = config.duration_s;
    if (duration < 0.0) {
        // Default pulse: the calibrated-seed pi time at the analytic rate.
        double rabi = resonant_rabi_frequency(config.e_ac, dc.theta(),
                                              config.material.gamma_dipole);
        if (rabi > 0.0) duration = 0.5 * pi / rabi;
    }

    ReadoutModel model{config.background_fraction};
    ProtocolResult result =
        run_protocol(dc, drive, duration, config.temperature_k, model,
                     config.material.gamma_dipole, config.dt_s);

    std::string report;
    report += "theta_rad = " + fmt(dc.theta()) + "\n";
    report += "e_dc_v_per_m = " + fmt(config.e_dc) + "\n";
    report += "e_ac_v_per_m = " + fmt(config.e_ac) + "\n";
    report += std::string("drive_direction = ") +
              (config.drive_direction == DriveDirection::along_110 ? "110" : "001") +
              "\n";
    report += "omega_rad_per_s = " + fmt(drive.omega) + "\n";
    report += "pulse_duration_s = " + fmt(duration) + "\n";
    report += "temperature_k = " + fmt(config.temperature_k) + "\n";
    report += "background_fraction = " + fmt(config.background_fraction) + "\n";
    for (int i = 0; i < 3; ++i)
        report += "init_p_xi" + std::to_string(i + 1) + " = " +
                  fmt(result.init_state.occupations[i]) + "\n";
    for (int i = 0; i < 3; ++i)
        report += "final_p_xi" + std::to_string(i + 1) + " = " +
                  fmt(result.final_occupations[i]) + "\n";
    report += "signal = " + fmt(result.signal) + "\n";
    report += "threshold = " + fmt(result.threshold) + "\n";
    report += std::string("decision = ") +
              (result.inferred_pseudospin == Pseudospin::xi1 ? "xi1" : "xi2") + "\n";

    if (per_step_csv) *per_step_csv = trace_csv(result.trace);
    return report;
}

namespace {

void deliver(const std::string& payload, const RunConfig& config,
             std::ostream& out) {
    if (config.output_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file '" + config.output_path +
                                 "'");
    file << payload;
}

}  // namespace

int run(const std::string& subcommand, const RunConfig& config,
        std::ostream& out, std::ostream& err) {
    try {
        if (subcommand == "multiplet") {
            deliver(render_multiplet_csv(config), config, out);
        } else if (subcommand == "spectrum-sweep") {
            deliver(render_spectrum_sweep_csv(config), config, out);
        } else if (subcommand == "coupling-sweep") {
            deliver(render_coupling_sweep_csv(config), config, out);
        } else if (subcommand == "rabi") {
            deliver(render_rabi_csv(config), config, out);
        } else if (subcommand == "ldos-sweep") {
            deliver(render_ldos_sweep_csv(config), config, out);
        } else if (subcommand == "pair") {
            deliver(render_pair_csv(config), config, out);
        } else if (subcommand == "calibrate") {
            out << render_calibrate_report(config);
        } else if (subcommand == "protocol") {
            std::string per_step;
            std::string report = render_protocol_report(
                config, config.output_path.empty() ? nullptr : &per_step);
            out << report;
            if (!config.output_path.empty()) deliver(per_step, config, out);
        } else {
            err << "error: usage_error: unknown subcommand '" << subcommand << "'\n";
            return 2;
        }
        return 0;
    } catch (const ConfigError& e) {
        err << "error: config_error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: domain_error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: precondition_error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: convergence_error: " << e.what() << "\n";
        return 5;
    }
}

}  // namespace ionspin::cli
