#pragma once

#include <array>

#include <Eigen/Dense>

#include "ionspin/angmom.hpp"

namespace ionspin {

// Electric field in the cubic crystal frame {x,y,z}.
struct FieldSpec {
    double magnitude;            // V/m
    Eigen::Vector3d direction;   // unit vector

    FieldSpec(double magnitude_v_per_m, const Eigen::Vector3d& unit_direction);

    // True when the direction lies in the (1-10) plane, i.e. d_x == d_y.
    bool in_cleavage_plane(double tol = 1e-9) const;
    // Polar angle from [001] within the (1-10) plane.
    double theta() const;
};

// Field at angle theta from [001] within the (1-10) plane:
// direction (sin(theta)/sqrt(2), sin(theta)/sqrt(2), cos(theta)).
FieldSpec field_in_cleavage_plane(double theta, double magnitude);

// Eigenstructure of the field Hamiltonian on the J=1 triplet.
struct StarkSpectrum {
    std::array<double, 3> xi;           // energies in units of gamma*E, branch order
    std::array<double, 3> energies_ev;  // the same scaled by gamma*E
    std::array<Eigen::Vector3d, 3> eigvecs;  // real vectors in the {X,Y,Z} basis
    double theta_mix;  // angle Theta between |xi1> and |Z>; NaN off-plane
    double eta;        // product of direction cosines
    bool in_plane;     // branch labels and Theta are only defined in-plane
    bool degenerate_pair;  // |xi2 - xi3| below resolution; labels by continuity
};

// Field Hamiltonian on the triplet in the {X,Y,Z} basis (eV): real
// symmetric, traceless, off-diagonal entries -gamma*E*\hat{E}.
Eigen::Matrix3d stark_hamiltonian(const FieldSpec& field, double gamma_dipole);

// Same Hamiltonian assembled from anticommutators of the Cartesian J=1
// operators; imaginary parts must cancel for any real field.
Eigen::Matrix3cd stark_hamiltonian_from_operators(const FieldSpec& field,
                                                  double gamma_dipole,
                                                  const SpinOperators& ops);

// Closed-form in-plane spectrum in units of gamma*E.
struct AnalyticSpectrum {
    double xi1, xi2, xi3;
    double theta_mix;
};
AnalyticSpectrum analytic_spectrum(double theta);

// Numeric diagonalization with branch labeling: xi3 carries the
// (1,-1,0)/sqrt(2) eigenvector, xi1 is the lower of the remaining pair.
// Requires magnitude > 0.
StarkSpectrum numeric_spectrum(const FieldSpec& field, double gamma_dipole);

enum class GroundBranch { xi1, xi3, degenerate };

// Which branch is lowest at this field angle. xi1 wins for
// |theta| < pi - atan(sqrt(2)) (mod 2*pi).
GroundBranch ground_state_branch(double theta);

}  // namespace ionspin
