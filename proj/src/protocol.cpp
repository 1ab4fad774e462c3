#include "ionspin/protocol.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ionspin/units.hpp"

namespace ionspin {

ThermalState thermal_occupations(const StarkSpectrum& spectrum,
                                 double temperature) {
    if (!(temperature > 0.0))
        throw std::domain_error("thermal_occupations: temperature must be positive");

    const auto& e = spectrum.energies_ev;
    double e_min = std::min({e[0], e[1], e[2]});
    double kt = constants.boltzmann * temperature;

    std::array<double, 3> weights;
    double z = 0.0;
    for (int i = 0; i < 3; ++i) {
        weights[i] = std::exp(-(e[i] - e_min) / kt);
        z += weights[i];
    }
    for (auto& w : weights) w /= z;
    return ThermalState{weights, temperature, e};
}

std::pair<double, double> ldos_weights(double theta_mix) {
    double s = std::sin(theta_mix), c = std::cos(theta_mix);
    return {s * s, c * c};
}

double detection_signal(const std::array<double, 3>& occupations,
                        double theta_mix, const ReadoutModel& model) {
    auto [w1, w2] = ldos_weights(theta_mix);
    double bg = model.background_fraction;
    return bg + (1.0 - bg) * (occupations[0] * w1 + occupations[1] * w2);
}

ProtocolResult run_protocol(const FieldSpec& dc, const DriveSpec& drive,
                            double pulse_duration, double temperature,
                            const ReadoutModel& model, double gamma_dipole,
                            double dt) {
    double theta = dc.theta();
    if (ground_state_branch(theta) != GroundBranch::xi1) {
        std::ostringstream msg;
        msg << "run_protocol: field angle theta = " << theta
            << " rad leaves |xi3> at or below |xi1>; initialization requires "
               "|theta| < pi - atan(sqrt(2)) ~ 2.1863 rad";
        throw std::invalid_argument(msg.str());
    }

    StarkSpectrum spectrum = numeric_spectrum(dc, gamma_dipole);
    ThermalState init = thermal_occupations(spectrum, temperature);

    ProtocolResult result;
    result.init_state = init;

    if (pulse_duration > 0.0) {
        if (dt <= 0.0) {
            double splitting = spectrum.energies_ev[1] - spectrum.energies_ev[0];
            dt = default_dt(drive.omega, splitting);
        }
        PulseProgram program{dc, drive, pulse_duration, dt};

        // The thermal ensemble is diagonal in the dc eigenbasis: evolve each
        // eigenstate and mix the resulting populations classically.
        std::array<EvolutionTrace, 3> traces;
        for (int i = 0; i < 3; ++i) {
            Eigen::Vector3cd initial =
                spectrum.eigvecs[i].cast<std::complex<double>>();
            traces[i] = propagate(program, initial, gamma_dipole);
        }
        result.trace.times = traces[0].times;
        result.trace.drive_omega = drive.omega;
        size_t n = traces[0].times.size();
        result.trace.populations.resize(n);
        for (size_t k = 0; k < n; ++k)
            for (int j = 0; j < 3; ++j) {
                double p = 0.0;
                for (int i = 0; i < 3; ++i)
                    p += init.occupations[i] * traces[i].populations[k][j];
                result.trace.populations[k][j] = p;
            }
        result.final_occupations = result.trace.populations.back();
    } else {
        result.final_occupations = init.occupations;
        result.trace.times = {0.0};
        result.trace.populations = {init.occupations};
    }

    result.signal = detection_signal(result.final_occupations,
                                     spectrum.theta_mix, model);
    auto [w1, w2] = ldos_weights(spectrum.theta_mix);
    double bg = model.background_fraction;
    double s1 = bg + (1.0 - bg) * w1;
    double s2 = bg + (1.0 - bg) * w2;
    result.threshold = 0.5 * (s1 + s2);

    bool looks_like_xi1 = (s1 >= s2) == (result.signal >= result.threshold);
    result.inferred_pseudospin = looks_like_xi1 ? Pseudospin::xi1 : Pseudospin::xi2;
    return result;
}

}  // namespace ionspin
