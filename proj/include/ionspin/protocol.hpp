#pragma once

#include <array>
#include <utility>

#include "ionspin/dynamics.hpp"
#include "ionspin/stark.hpp"

namespace ionspin {

struct ThermalState {
    std::array<double, 3> occupations;   // (p_xi1, p_xi2, p_xi3)
    double temperature;                  // K
    std::array<double, 3> splitting_ev;  // level energies used
};

enum class TipSite { on_axis_nodal_plane };

// Tunneling readout at the nodal-plane tip site: a fixed spin-independent
// background plus the |X+Y> projection of the occupied state.
struct ReadoutModel {
    double background_fraction = 0.1;
    TipSite tip_site = TipSite::on_axis_nodal_plane;

    double visibility() const { return 1.0 - background_fraction; }
};

// Boltzmann occupations of the three field-split levels.
ThermalState thermal_occupations(const StarkSpectrum& spectrum, double temperature);

// Spin-dependent LDOS factors at the tip site: (sin^2, cos^2) of the
// mixing angle for |xi1> and |xi2>.
std::pair<double, double> ldos_weights(double theta_mix);

// signal = bg + (1-bg) * (p1*w1 + p2*w2); |xi3> carries no weight here.
double detection_signal(const std::array<double, 3>& occupations,
                        double theta_mix, const ReadoutModel& model);

enum class Pseudospin { xi1, xi2 };

struct ProtocolResult {
    ThermalState init_state;
    std::array<double, 3> final_occupations;
    double signal;
    double threshold;             // midpoint of the two pure-state signals
    Pseudospin inferred_pseudospin;
    EvolutionTrace trace;         // mixture-averaged populations during the pulse
};

// Initialize thermally, drive for pulse_duration, read out. Requires the
// field angle in the regime where |xi1> is the ground state,
// |theta| < pi - atan(sqrt(2)).
ProtocolResult run_protocol(const FieldSpec& dc, const DriveSpec& drive,
                            double pulse_duration, double temperature,
                            const ReadoutModel& model, double gamma_dipole,
                            double dt = 0.0);

}  // namespace ionspin
