#pragma once

#include <Eigen/Dense>

namespace ionspin {

// The two drive ports that decouple |xi3> from the pseudospin pair:
// [110] through the tip, [001] through the gates.
enum class DriveDirection { along_110, along_001 };

struct DriveSpec {
    double e_ac;               // V/m
    DriveDirection direction;
    double omega;              // rad/s, carrier angular frequency
    double phase;              // rad

    DriveSpec(double e_ac_v_per_m, DriveDirection dir, double omega_rad_per_s,
              double phase_rad = 0.0);
};

Eigen::Vector3d drive_direction_vector(DriveDirection direction);

// Amplitude of the cos(omega*t) drive term in the dc eigenbasis
// {|xi1>,|xi2>,|xi3>} (eV). Both ports leave the (1,3) and (2,3)
// couplings exactly zero; the [001] port additionally carries a pure
// phase term on the |xi3> diagonal.
Eigen::Matrix3d ac_hamiltonian_in_eigenbasis(double theta_mix, double e_ac,
                                             double gamma_dipole,
                                             DriveDirection direction =
                                                 DriveDirection::along_110);

// Detuning reference for the Rabi formula. The pseudospin level splitting
// is gamma*E_dc*sqrt(4-3cos^2(theta)); the second form exists only as a
// diagnostic for comparison.
enum class DetuningReference { level_splitting, alternate_form };

// xi2 - xi1 splitting in eV at the given field angle and magnitude.
double pseudospin_splitting(double e_dc, double theta, double gamma_dipole);

// Rabi angular frequency for a [110] drive,
//   hbar*Omega = (1/2)*sqrt((gamma*E_ac*cos(2 Theta))^2 + (hbar*omega - splitting)^2),
// so the |xi2> population evolves as sin^2(Omega*t) at resonance.
double rabi_frequency(double e_ac, double e_dc, double theta, double omega,
                      double gamma_dipole,
                      DetuningReference ref = DetuningReference::level_splitting);

// Omega at exact resonance: gamma*E_ac*|cos(2 Theta)| / (2 hbar).
double resonant_rabi_frequency(double e_ac, double theta, double gamma_dipole);

}  // namespace ionspin
