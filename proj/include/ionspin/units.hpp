#pragma once

#include <stdexcept>

namespace ionspin {

// Physical constants in the internal unit system: energies in eV, time in
// seconds, electric fields in V/m, magnetic fields in Tesla.
struct Constants {
    double hbar;               // eV s
    double boltzmann;          // eV / K
    double bohr_magneton;      // eV / T
    double elementary_charge;  // C
};

// CODATA 2018 values.
inline constexpr Constants constants{
    6.582119569e-16,   // hbar
    8.617333262e-5,    // k_B
    5.7883818060e-5,   // mu_B
    1.602176634e-19,   // e
};

// Couplings of the Mn core-spin / bound-hole complex in GaAs.
struct MaterialParams {
    double alpha;         // eV, core-spin / hole-spin exchange
    double beta;          // eV, hole spin-orbit coupling
    double gamma_dipole;  // C m, linear field-splitting coefficient
    double g_factor;      // dimensionless
    double hole_radius;   // m, bound-hole wave function radius
};

inline constexpr MaterialParams mn_gaas_params{
    0.3,       // alpha
    -0.08,     // beta
    6.4e-30,   // gamma_dipole
    2.77,      // g_factor
    1.3e-9,    // hole_radius (13 Angstrom)
};

// Energy scale gamma*E of the field-split triplet, converted from Joule to eV.
inline double stark_energy(double gamma_dipole, double field_magnitude) {
    if (gamma_dipole < 0.0 || field_magnitude < 0.0)
        throw std::domain_error("stark_energy: arguments must be non-negative");
    return gamma_dipole * field_magnitude / constants.elementary_charge;
}

// Zeeman splitting g*mu_B*B, for comparison against the electric splitting.
inline double zeeman_equivalent(double g_factor, double b_field) {
    if (g_factor < 0.0 || b_field < 0.0)
        throw std::domain_error("zeeman_equivalent: arguments must be non-negative");
    return g_factor * constants.bohr_magneton * b_field;
}

}  // namespace ionspin
