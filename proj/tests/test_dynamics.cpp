#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "ionspin/dynamics.hpp"
#include "ionspin/units.hpp"

using namespace ionspin;
using std::numbers::pi;

namespace {

const double kGamma = 6.4e-30;
const double kEdc = 1.0e7;
const double kEac = 2.5e6;

FieldSpec paper_dc() { return field_in_cleavage_plane(0.0, kEdc); }

PulseProgram paper_program(double duration, double omega_scale = 1.0,
                           double e_ac = kEac) {
    FieldSpec dc = paper_dc();
    double omega = resonant_omega(dc, kGamma) * omega_scale;
    double splitting = pseudospin_splitting(kEdc, 0.0, kGamma);
    return PulseProgram{dc, DriveSpec(e_ac, DriveDirection::along_110, omega),
                        duration, default_dt(omega, splitting)};
}

Eigen::Vector3cd xi1_state() {
    StarkSpectrum s = numeric_spectrum(paper_dc(), kGamma);
    return s.eigvecs[0].cast<std::complex<double>>();
}

}  // namespace

TEST_CASE("an eigenstate without drive stays put") {
    PulseProgram program = paper_program(5e-11, 1.0, 0.0);
    EvolutionTrace trace = propagate(program, xi1_state(), kGamma);
    for (const auto& p : trace.populations) {
        CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(p[1] < 1e-12);
        CHECK(p[2] < 1e-12);
    }
}

TEST_CASE("resonant drive transfers the pseudospin at the predicted rate") {
    double rabi = resonant_rabi_frequency(kEac, 0.0, kGamma);
    EvolutionTrace trace = propagate(paper_program(3.0 * pi / rabi), xi1_state(),
                                     kGamma, true);

    double max_p2 = 0.0, max_p3 = 0.0;
    for (const auto& p : trace.populations) {
        max_p2 = std::max(max_p2, p[1]);
        max_p3 = std::max(max_p3, p[2]);
        CHECK(std::abs(p[0] + p[1] + p[2] - 1.0) < 1e-9);
    }
    CHECK(max_p2 > 0.99);
    CHECK(max_p3 < 1e-6);  // both ports leave |xi3> untouched

    // Norm drift stays at rounding level.
    for (const auto& psi : trace.states)
        CHECK(std::abs(psi.norm() - 1.0) < 1e-9);

    double extracted = extract_rabi(trace);
    CHECK(std::abs(extracted - rabi) / rabi < 0.05);
    // Population cycle (the sin^2 period) sits at pi/Omega ~ 41 ps; the
    // nominal 80 ps figure is 2 pi / Omega.
    CHECK(std::abs(pi / extracted - 41.4e-12) / 41.4e-12 < 0.05);
    CHECK(std::abs(2.0 * pi / extracted - 80e-12) / 80e-12 < 0.10);
}

TEST_CASE("synthetic sin^2 trace round-trips through the extractor") {
    double omega = 2.0 * pi * 12e9;
    EvolutionTrace trace;
    double dt = 2e-13;
    for (int i = 0; i <= 625; ++i) {
        double t = i * dt;
        double p2 = std::pow(std::sin(omega * t), 2);
        trace.times.push_back(t);
        trace.populations.push_back({1.0 - p2, p2, 0.0});
    }
    CHECK(std::abs(extract_rabi(trace) - omega) / omega < 1e-3);
}

TEST_CASE("detuned drives follow the generalized Rabi formula") {
    double splitting = pseudospin_splitting(kEdc, 0.0, kGamma);
    double omega_res = splitting / constants.hbar;
    double g = stark_energy(kGamma, kEac) / constants.hbar;  // coupling rate

    for (double frac : {0.3, 0.6, 1.0}) {
        double delta = frac * g;
        double omega = omega_res + delta;
        double expected = 0.5 * std::hypot(g, delta);

        PulseProgram program = paper_program(3.0 * pi / expected);
        program.drive = DriveSpec(kEac, DriveDirection::along_110, omega);
        program.dt = default_dt(omega, splitting);
        EvolutionTrace trace = propagate(program, xi1_state(), kGamma);

        double extracted = extract_rabi(trace);
        CAPTURE(frac);
        CHECK(std::abs(extracted - expected) / expected < 0.05);
    }
}

TEST_CASE("halving the step leaves observables unchanged at the tolerance") {
    double rabi = resonant_rabi_frequency(kEac, 0.0, kGamma);
    PulseProgram program = paper_program(pi / rabi);
    EvolutionTrace coarse = propagate(program, xi1_state(), kGamma);
    program.dt *= 0.5;
    EvolutionTrace fine = propagate(program, xi1_state(), kGamma);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(coarse.populations.back()[i] - fine.populations.back()[i]) <
              1e-6);
}

TEST_CASE("under-resolved steps are rejected with a diagnostic") {
    PulseProgram program = paper_program(1e-10);
    program.dt = 1.0 / program.drive.omega;  // omega*dt = 1
    CHECK_THROWS_WITH_AS(propagate(program, xi1_state(), kGamma),
                         doctest::Contains("does not resolve"), std::domain_error);

    PulseProgram ok = paper_program(1e-12);
    CHECK_THROWS_AS(propagate(ok, Eigen::Vector3cd(0.5, 0, 0), kGamma),
                    std::domain_error);
}

TEST_CASE("slow magnitude ramps are adiabatic") {
    FieldSpec start = paper_dc();
    double splitting = pseudospin_splitting(kEdc, 0.0, kGamma);
    double hbar_over_split = constants.hbar / splitting;

    // Ramp 1e7 -> 3e7 V/m over 200 characteristic times.
    EvolutionTrace trace =
        propagate_ramp(start, 3e7, 200.0 * hbar_over_split, hbar_over_split / 200.0,
                       kGamma, xi1_state());
    for (const auto& p : trace.populations) CHECK(p[0] > 0.999);
}

TEST_CASE("too little data for extraction raises") {
    double rabi = resonant_rabi_frequency(kEac, 0.0, kGamma);
    EvolutionTrace trace =
        propagate(paper_program(0.5 * pi / rabi), xi1_state(), kGamma);
    CHECK_THROWS_AS(extract_rabi(trace), std::runtime_error);
}

TEST_CASE("pi-pulse calibration at the operating point") {
    CalibrationResult cal =
        calibrate_pi_pulse(paper_dc(), DriveDirection::along_110, kEac, kGamma);
    CHECK(cal.fidelity > 0.99);

    // Transfer time pi/(2 Omega) at the analytic resonant rate, ~20.7 ps.
    double rabi = resonant_rabi_frequency(kEac, 0.0, kGamma);
    CHECK(std::abs(cal.duration - 0.5 * pi / rabi) / (0.5 * pi / rabi) < 0.10);

    // Carrier lands near the level splitting.
    double omega_res = resonant_omega(paper_dc(), kGamma);
    CHECK(std::abs(cal.omega - omega_res) / omega_res < 0.03);

    SUBCASE("halving the drive doubles the transfer time") {
        CalibrationResult half = calibrate_pi_pulse(
            paper_dc(), DriveDirection::along_110, kEac / 2.0, kGamma);
        CHECK(half.fidelity > 0.99);
        CHECK(std::abs(half.duration - 2.0 * cal.duration) / (2.0 * cal.duration) <
              0.10);
    }

    SUBCASE("a detuned seed converges to the same carrier") {
        // Seed at sqrt(4 - cos^2(0)) = sqrt(3) times the splitting.
        CalibrationResult detuned =
            calibrate_pi_pulse(paper_dc(), DriveDirection::along_110, kEac, kGamma,
                               std::sqrt(3.0) * omega_res);
        CHECK(detuned.fidelity > 0.99);
        CHECK(std::abs(detuned.omega - cal.omega) / cal.omega < 0.01);
    }
}

TEST_CASE("gate drive cannot calibrate with the dc field on its own axis") {
    // [001] drive at theta = 0: sin(T)cos(T) = 0, nothing to optimize.
    CHECK_THROWS_AS(
        calibrate_pi_pulse(paper_dc(), DriveDirection::along_001, kEac, kGamma),
        std::runtime_error);
}

TEST_CASE("gate drive works away from theta = 0") {
    FieldSpec dc = field_in_cleavage_plane(0.8, kEdc);
    CalibrationResult cal =
        calibrate_pi_pulse(dc, DriveDirection::along_001, kEac, kGamma);
    CHECK(cal.fidelity > 0.99);
}
