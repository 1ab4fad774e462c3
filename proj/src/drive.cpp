#include "ionspin/drive.hpp"

#include <cmath>
#include <stdexcept>

#include "ionspin/stark.hpp"
#include "ionspin/units.hpp"

namespace ionspin {

DriveSpec::DriveSpec(double e_ac_v_per_m, DriveDirection dir,
                     double omega_rad_per_s, double phase_rad)
    : e_ac(e_ac_v_per_m), direction(dir), omega(omega_rad_per_s), phase(phase_rad) {
    if (!(e_ac >= 0.0))
        throw std::domain_error("DriveSpec: e_ac must be non-negative");
    if (!(omega > 0.0))
        throw std::domain_error("DriveSpec: omega must be positive");
}

Eigen::Vector3d drive_direction_vector(DriveDirection direction) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    if (direction == DriveDirection::along_110)
        return {inv_sqrt2, inv_sqrt2, 0.0};
    return {0.0, 0.0, 1.0};
}

Eigen::Matrix3d ac_hamiltonian_in_eigenbasis(double theta_mix, double e_ac,
                                             double gamma_dipole,
                                             DriveDirection direction) {
    double scale = stark_energy(gamma_dipole, e_ac);
    double s2 = std::sin(2.0 * theta_mix), c2 = std::cos(2.0 * theta_mix);
    Eigen::Matrix3d h = Eigen::Matrix3d::Zero();

    if (direction == DriveDirection::along_110) {
        h(0, 0) = -s2;
        h(0, 1) = h(1, 0) = c2;
        h(1, 1) = s2;
    } else {
        // [001] port: same change of basis applied to the field matrix for
        // z-directed E; the xi3 diagonal picks up a pure phase term.
        double st = std::sin(theta_mix), ct = std::cos(theta_mix);
        h(0, 0) = -st * st;
        h(0, 1) = h(1, 0) = st * ct;
        h(1, 1) = -ct * ct;
        h(2, 2) = 1.0;
    }
    return scale * h;
}

double pseudospin_splitting(double e_dc, double theta, double gamma_dipole) {
    double c = std::cos(theta);
    return stark_energy(gamma_dipole, e_dc) * std::sqrt(4.0 - 3.0 * c * c);
}

double rabi_frequency(double e_ac, double e_dc, double theta, double omega,
                      double gamma_dipole, DetuningReference ref) {
    if (!(e_dc > 0.0))
        throw std::domain_error("rabi_frequency: e_dc must be positive");

    double c = std::cos(theta);
    double theta_mix = analytic_spectrum(theta).theta_mix;
    double coupling = stark_energy(gamma_dipole, e_ac) * std::cos(2.0 * theta_mix);

    double splitting = ref == DetuningReference::level_splitting
                           ? pseudospin_splitting(e_dc, theta, gamma_dipole)
                           : stark_energy(gamma_dipole, e_dc) *
                                 std::sqrt(4.0 - c * c);
    double detuning = constants.hbar * omega - splitting;
    return 0.5 * std::hypot(coupling, detuning) / constants.hbar;
}

double resonant_rabi_frequency(double e_ac, double theta, double gamma_dipole) {
    double theta_mix = analytic_spectrum(theta).theta_mix;
    return stark_energy(gamma_dipole, e_ac) * std::abs(std::cos(2.0 * theta_mix)) /
           (2.0 * constants.hbar);
}

}  // namespace ionspin
