#include "ionspin/dynamics.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ionspin/units.hpp"

namespace ionspin {

namespace {

using std::numbers::pi;

// Exact step for a real-symmetric Hamiltonian: psi <- exp(-i H dt / hbar) psi.
void apply_step(const Eigen::Matrix3d& h_ev, double dt, Eigen::Vector3cd& psi) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(h_ev);
    const Eigen::Vector3d& evals = solver.eigenvalues();
    const Eigen::Matrix3d& v = solver.eigenvectors();
    Eigen::Vector3cd amps = v.transpose() * psi;
    for (int i = 0; i < 3; ++i)
        amps(i) *= std::polar(1.0, -evals(i) * dt / constants.hbar);
    psi = v * amps;
}

std::array<double, 3> populations_in(const std::array<Eigen::Vector3d, 3>& basis,
                                     const Eigen::Vector3cd& psi) {
    std::array<double, 3> p;
    for (int i = 0; i < 3; ++i)
        p[i] = std::norm(basis[i].cast<std::complex<double>>().dot(psi));
    return p;
}

void check_initial(const Eigen::Vector3cd& initial) {
    if (std::abs(initial.norm() - 1.0) > 1e-12)
        throw std::domain_error("propagate: initial state must be normalized");
}

// Generic driver over a time-dependent Hamiltonian and measurement basis.
EvolutionTrace run_evolution(
    double duration, double dt, const Eigen::Vector3cd& initial,
    const std::function<Eigen::Matrix3d(double)>& hamiltonian_at,
    const std::function<std::array<Eigen::Vector3d, 3>(double)>& basis_at,
    bool record_states, double drive_omega) {
    long n_steps = static_cast<long>(std::ceil(duration / dt - 1e-9));
    if (n_steps < 1) n_steps = 1;
    double step = duration / n_steps;  // uniform grid, step <= dt

    EvolutionTrace trace;
    trace.drive_omega = drive_omega;
    trace.times.reserve(n_steps + 1);
    trace.populations.reserve(n_steps + 1);

    Eigen::Vector3cd psi = initial;
    auto record = [&](double t) {
        trace.times.push_back(t);
        trace.populations.push_back(populations_in(basis_at(t), psi));
        if (record_states) trace.states.push_back(psi);
    };

    record(0.0);
    for (long k = 0; k < n_steps; ++k) {
        apply_step(hamiltonian_at((k + 0.5) * step), step, psi);
        record((k + 1) * step);
    }
    return trace;
}

}  // namespace

double default_dt(double omega, double splitting_ev) {
    double drive_scale = 2.0 * pi / omega;
    double level_scale = constants.hbar / splitting_ev;
    return std::min(drive_scale, level_scale) / 200.0;
}

double resonant_omega(const FieldSpec& dc, double gamma_dipole) {
    return pseudospin_splitting(dc.magnitude, dc.theta(), gamma_dipole) /
           constants.hbar;
}

EvolutionTrace propagate(const PulseProgram& program,
                         const Eigen::Vector3cd& initial, double gamma_dipole,
                         bool record_states) {
    check_initial(initial);
    if (!(program.dt > 0.0) || program.duration < program.dt)
        throw std::domain_error("propagate: need dt > 0 and duration >= dt");

    double splitting =
        pseudospin_splitting(program.dc.magnitude, program.dc.theta(), gamma_dipole);
    if (program.drive.omega * program.dt >= 0.2 ||
        splitting * program.dt / constants.hbar >= 0.2) {
        std::ostringstream msg;
        msg << "propagate: dt = " << program.dt
            << " s does not resolve the dynamics (need omega*dt < 0.2, got "
            << program.drive.omega * program.dt << "; splitting*dt/hbar < 0.2, got "
            << splitting * program.dt / constants.hbar << ")";
        throw std::domain_error(msg.str());
    }

    Eigen::Matrix3d h_dc = stark_hamiltonian(program.dc, gamma_dipole);
    FieldSpec ac_field(program.drive.e_ac,
                       drive_direction_vector(program.drive.direction));
    Eigen::Matrix3d h_ac = stark_hamiltonian(ac_field, gamma_dipole);

    StarkSpectrum spectrum = numeric_spectrum(program.dc, gamma_dipole);
    const std::array<Eigen::Vector3d, 3> basis = spectrum.eigvecs;

    double omega = program.drive.omega, phase = program.drive.phase;
    return run_evolution(
        program.duration, program.dt, initial,
        [&](double t) -> Eigen::Matrix3d {
            return h_dc + std::cos(omega * t + phase) * h_ac;
        },
        [&](double) { return basis; }, record_states, omega);
}

EvolutionTrace propagate_ramp(const FieldSpec& dc_start, double end_magnitude,
                              double duration, double dt, double gamma_dipole,
                              const Eigen::Vector3cd& initial) {
    check_initial(initial);
    if (!(dt > 0.0) || duration < dt)
        throw std::domain_error("propagate_ramp: need dt > 0 and duration >= dt");
    if (!(end_magnitude > 0.0) || !(dc_start.magnitude > 0.0))
        throw std::domain_error("propagate_ramp: magnitudes must stay positive");

    auto field_at = [&](double t) {
        double frac = std::clamp(t / duration, 0.0, 1.0);
        double mag = dc_start.magnitude + frac * (end_magnitude - dc_start.magnitude);
        return FieldSpec(mag, dc_start.direction);
    };
    return run_evolution(
        duration, dt, initial,
        [&](double t) { return stark_hamiltonian(field_at(t), gamma_dipole); },
        [&](double t) { return numeric_spectrum(field_at(t), gamma_dipole).eigvecs; },
        false, 0.0);
}

double extract_rabi(const EvolutionTrace& trace) {
    const auto& times = trace.times;
    if (times.size() < 8)
        throw std::runtime_error("extract_rabi: trace too short");

    std::vector<double> p2(times.size());
    for (size_t i = 0; i < times.size(); ++i) p2[i] = trace.populations[i][1];

    // Boxcar over one carrier period nulls the omega and 2*omega ripple of
    // the exact propagation without shifting the slow oscillation's zeros.
    size_t lo = 0, hi = p2.size();
    if (trace.drive_omega > 0.0 && times.size() > 2) {
        double dt = times[1] - times[0];
        long half = std::lround(pi / (trace.drive_omega * dt));
        if (half >= 1 && 2 * static_cast<size_t>(half) + 1 < p2.size() / 4) {
            std::vector<double> smoothed(p2.size());
            for (size_t i = half; i + half < p2.size(); ++i) {
                double acc = 0.0;
                for (long k = -half; k <= half; ++k) acc += p2[i + k];
                smoothed[i] = acc / (2 * half + 1);
            }
            p2 = std::move(smoothed);
            lo = half;
            hi = p2.size() - half;
        }
    }

    double mean = 0.0;
    for (size_t i = lo; i < hi; ++i) mean += p2[i];
    mean /= (hi - lo);

    // Interpolated zero crossings of the centered signal; the crossing
    // spacing of sin^2(Omega t) - 1/2 is pi/(2 Omega).
    std::vector<double> crossings;
    for (size_t i = lo + 1; i < hi; ++i) {
        double a = p2[i - 1] - mean, b = p2[i] - mean;
        if (a == 0.0) continue;
        if ((a < 0.0) != (b < 0.0)) {
            double frac = a / (a - b);
            crossings.push_back(times[i - 1] + frac * (times[i] - times[i - 1]));
        }
    }
    if (crossings.size() < 4)
        throw std::runtime_error(
            "extract_rabi: need at least two full oscillations in the trace");

    std::vector<double> spacings;
    for (size_t i = 1; i < crossings.size(); ++i)
        spacings.push_back(crossings[i] - crossings[i - 1]);
    std::vector<double> sorted = spacings;
    std::sort(sorted.begin(), sorted.end());
    double median = sorted[sorted.size() / 2];

    // Discard spurious crossings from residual ripple.
    double acc = 0.0;
    long count = 0;
    for (double s : spacings) {
        if (s > 0.5 * median && s < 1.5 * median) {
            acc += s;
            ++count;
        }
    }
    if (count < 3)
        throw std::runtime_error("extract_rabi: oscillation too irregular");
    return pi / (2.0 * (acc / count));
}

namespace {

// Golden-section maximization on [a, b]; f assumed unimodal there.
template <typename F>
double golden_max(F&& f, double a, double b, int iters = 40) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

// Coarse scan to bracket the best point, then golden-section refinement.
template <typename F>
double bracket_and_refine(F&& f, double a, double b, int scan_points) {
    double best_x = a, best_f = -1.0;
    for (int i = 0; i < scan_points; ++i) {
        double x = a + (b - a) * i / (scan_points - 1);
        double fx = f(x);
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
        }
    }
    double h = (b - a) / (scan_points - 1);
    return golden_max(f, std::max(a, best_x - h), std::min(b, best_x + h));
}

}  // namespace

CalibrationResult calibrate_pi_pulse(const FieldSpec& dc,
                                     DriveDirection drive_direction,
                                     double e_ac, double gamma_dipole,
                                     double omega_seed) {
    if (!(e_ac > 0.0))
        throw std::domain_error("calibrate_pi_pulse: e_ac must be positive");

    double theta = dc.theta();
    double theta_mix = analytic_spectrum(theta).theta_mix;
    double coupling_factor =
        drive_direction == DriveDirection::along_110
            ? std::abs(std::cos(2.0 * theta_mix))
            : std::abs(std::sin(theta_mix) * std::cos(theta_mix));
    if (coupling_factor < 1e-6)
        throw std::runtime_error(
            "calibrate_pi_pulse: drive does not couple the pseudospin at this "
            "field angle");

    double splitting = pseudospin_splitting(dc.magnitude, theta, gamma_dipole);
    if (omega_seed <= 0.0) omega_seed = splitting / constants.hbar;
    double rabi = stark_energy(gamma_dipole, e_ac) * coupling_factor /
                  (2.0 * constants.hbar);
    double duration_seed = 0.5 * pi / rabi;  // first transfer maximum

    StarkSpectrum spectrum = numeric_spectrum(dc, gamma_dipole);
    Eigen::Vector3cd initial = spectrum.eigvecs[0].cast<std::complex<double>>();

    auto final_p2 = [&](double omega, double duration) {
        PulseProgram program{dc,
                             DriveSpec(e_ac, drive_direction, omega),
                             duration,
                             default_dt(omega, splitting)};
        EvolutionTrace trace = propagate(program, initial, gamma_dipole);
        return trace.populations.back()[1];
    };

    double omega = omega_seed, duration = duration_seed;
    for (int round = 0; round < 3; ++round) {
        omega = bracket_and_refine(
            [&](double w) { return final_p2(w, duration); }, 0.4 * omega_seed,
            2.0 * omega_seed, 33);
        duration = bracket_and_refine(
            [&](double d) { return final_p2(omega, d); }, 0.25 * duration_seed,
            2.0 * duration_seed, 33);
    }

    double fidelity = final_p2(omega, duration);
    if (fidelity < 0.5) {
        std::ostringstream msg;
        msg << "calibrate_pi_pulse: search stalled at fidelity " << fidelity
            << " (omega = " << omega << " rad/s, duration = " << duration << " s)";
        throw std::runtime_error(msg.str());
    }
    return {omega, duration, fidelity};
}

}  // namespace ionspin
