#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "ionspin/drive.hpp"
#include "ionspin/stark.hpp"

namespace ionspin {

struct PulseProgram {
    FieldSpec dc;
    DriveSpec drive;
    double duration;  // s
    double dt;        // s
};

// Resolution rule: dt = (1/200) * min(2*pi/omega, hbar/splitting).
double default_dt(double omega, double splitting_ev);

// Carrier frequency matching the xi2-xi1 splitting.
double resonant_omega(const FieldSpec& dc, double gamma_dipole);

struct EvolutionTrace {
    std::vector<double> times;                       // s
    std::vector<std::array<double, 3>> populations;  // dc-eigenbasis (xi1,xi2,xi3)
    std::vector<Eigen::Vector3cd> states;            // empty unless recorded
    double drive_omega = 0.0;  // carrier angular frequency, 0 when none
};

// Piecewise-constant midpoint propagation: each step applies the exact
// exponential of the Hamiltonian at the interval midpoint. Populations are
// recorded against the dc eigenbasis. The initial state must be normalized
// to 1e-12; a dt that violates the resolution rule (omega*dt < 0.2 and
// splitting*dt/hbar < 0.2) is rejected.
EvolutionTrace propagate(const PulseProgram& program,
                         const Eigen::Vector3cd& initial, double gamma_dipole,
                         bool record_states = false);

// Drive-free evolution with the dc magnitude ramped linearly from its
// initial value to end_magnitude; populations use the instantaneous basis.
EvolutionTrace propagate_ramp(const FieldSpec& dc_start, double end_magnitude,
                              double duration, double dt, double gamma_dipole,
                              const Eigen::Vector3cd& initial);

// Oscillation angular frequency Omega of the xi2 population via
// zero-crossing interpolation of P_xi2 - mean; the population oscillates
// at 2*Omega. Needs at least two full oscillations in the trace.
double extract_rabi(const EvolutionTrace& trace);

struct CalibrationResult {
    double omega;     // rad/s
    double duration;  // s
    double fidelity;  // max final P_xi2 reached
};

// Maximizes population transfer |xi1> -> |xi2> over (omega, duration) with
// a deterministic coordinate search (coarse bracket, then golden-section,
// three rounds) seeded at the analytic resonance and transfer time. A
// nonzero omega_seed recenters the carrier search window, e.g. to probe
// convergence from a detuned starting guess.
// Throws std::runtime_error if the search cannot exceed fidelity 0.5.
CalibrationResult calibrate_pi_pulse(const FieldSpec& dc,
                                     DriveDirection drive_direction,
                                     double e_ac, double gamma_dipole,
                                     double omega_seed = 0.0);

}  // namespace ionspin
