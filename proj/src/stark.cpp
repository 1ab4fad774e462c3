#include "ionspin/stark.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ionspin/units.hpp"

namespace ionspin {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

FieldSpec::FieldSpec(double magnitude_v_per_m, const Eigen::Vector3d& unit_direction)
    : magnitude(magnitude_v_per_m), direction(unit_direction) {
    if (!(magnitude >= 0.0))
        throw std::domain_error("FieldSpec: magnitude must be non-negative");
    if (std::abs(direction.norm() - 1.0) > 1e-12)
        throw std::domain_error("FieldSpec: direction must be a unit vector");
}

bool FieldSpec::in_cleavage_plane(double tol) const {
    return std::abs(direction.x() - direction.y()) < tol;
}

double FieldSpec::theta() const {
    if (!in_cleavage_plane())
        throw std::domain_error("FieldSpec::theta: field is not in the (1-10) plane");
    return std::atan2((direction.x() + direction.y()) / kSqrt2, direction.z());
}

FieldSpec field_in_cleavage_plane(double theta, double magnitude) {
    double s = std::sin(theta) / kSqrt2;
    return FieldSpec(magnitude, Eigen::Vector3d(s, s, std::cos(theta)));
}

Eigen::Matrix3d stark_hamiltonian(const FieldSpec& field, double gamma_dipole) {
    double scale = -stark_energy(gamma_dipole, field.magnitude);
    const Eigen::Vector3d& e = field.direction;
    Eigen::Matrix3d h;
    h << 0.0, e.z(), e.y(),
         e.z(), 0.0, e.x(),
         e.y(), e.x(), 0.0;
    return scale * h;
}

Eigen::Matrix3cd stark_hamiltonian_from_operators(const FieldSpec& field,
                                                  double gamma_dipole,
                                                  const SpinOperators& ops) {
    if (ops.dim() != 3 || ops.basis_label != BasisLabel::cartesian_xyz)
        throw std::domain_error(
            "stark_hamiltonian_from_operators: need Cartesian J=1 operators");

    double scale = stark_energy(gamma_dipole, field.magnitude);
    const Eigen::Vector3d& e = field.direction;
    auto anticommutator = [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
        return (a * b + b * a).eval();
    };
    Eigen::Matrix3cd h = scale * (e.x() * anticommutator(ops.jy, ops.jz) +
                                  e.y() * anticommutator(ops.jz, ops.jx) +
                                  e.z() * anticommutator(ops.jx, ops.jy));
    return h;
}

AnalyticSpectrum analytic_spectrum(double theta) {
    double c = std::cos(theta);
    double root = std::sqrt(4.0 - 3.0 * c * c);
    AnalyticSpectrum out;
    out.xi1 = 0.5 * (-c - root);
    out.xi2 = 0.5 * (-c + root);
    out.xi3 = c;
    // xi1 <= 0 everywhere, so |xi1| = -xi1; Theta in [0, pi] with
    // Theta(0) = pi/2 and continuity on (-pi, pi].
    out.theta_mix = std::atan2(std::abs(out.xi1), std::sin(theta));
    return out;
}

StarkSpectrum numeric_spectrum(const FieldSpec& field, double gamma_dipole) {
    if (!(field.magnitude > 0.0))
        throw std::domain_error("numeric_spectrum: requires magnitude > 0");

    double scale = stark_energy(gamma_dipole, field.magnitude);
    Eigen::Matrix3d h = stark_hamiltonian(field, gamma_dipole) / scale;

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(h);
    Eigen::Vector3d evals = solver.eigenvalues();  // ascending
    Eigen::Matrix3d evecs = solver.eigenvectors();

    StarkSpectrum out;
    out.eta = field.direction.prod();
    out.in_plane = field.in_cleavage_plane();
    out.degenerate_pair = false;
    out.theta_mix = std::numeric_limits<double>::quiet_NaN();

    if (!out.in_plane) {
        for (int i = 0; i < 3; ++i) {
            out.xi[i] = evals(i);
            out.energies_ev[i] = evals(i) * scale;
            out.eigvecs[i] = evecs.col(i);
        }
        return out;
    }

    // xi3 carries the theta-independent eigenvector (1,-1,0)/sqrt(2).
    const Eigen::Vector3d u(1.0 / kSqrt2, -1.0 / kSqrt2, 0.0);
    Eigen::Vector3d overlap = (evecs.transpose() * u).cwiseAbs();
    int i3;
    overlap.maxCoeff(&i3);

    Eigen::Vector3d v3 = evecs.col(i3);
    if (overlap(i3) < 1.0 - 1e-9) {
        // The solver mixed u into a numerically degenerate pair; u itself is
        // an exact eigenvector for in-plane fields, so relabel by continuity.
        out.degenerate_pair = true;
        int partner = -1;
        for (int i = 0; i < 3; ++i)
            if (i != i3 && std::abs(evals(i) - evals(i3)) < 1e-9) partner = i;
        if (partner < 0)
            throw std::runtime_error("numeric_spectrum: branch labeling failed");
        Eigen::Vector3d ra = evecs.col(i3) - evecs.col(i3).dot(u) * u;
        Eigen::Vector3d rb = evecs.col(partner) - evecs.col(partner).dot(u) * u;
        evecs.col(partner) = (ra.norm() > rb.norm() ? ra : rb).normalized();
        v3 = u;
    }

    int lo = -1, hi = -1;
    for (int i = 0; i < 3; ++i) {
        if (i == i3) continue;
        if (lo < 0) lo = i;
        else hi = i;
    }
    if (evals(hi) < evals(lo)) std::swap(lo, hi);
    if (std::abs(evals(i3) - evals(hi)) < 1e-12 ||
        std::abs(evals(i3) - evals(lo)) < 1e-12)
        out.degenerate_pair = true;

    out.xi = {evals(lo), evals(hi), evals(i3)};

    // Sign conventions: |xi1> has sin(Theta) >= 0; ties at theta = +-pi
    // resolve like the closed form (Theta(pi) = 0, Theta(-pi) = pi).
    Eigen::Vector3d v1 = evecs.col(lo);
    double s_comp = (v1.x() + v1.y()) / kSqrt2;
    if (std::abs(s_comp) < 1e-12) {
        double want_z = std::sin(field.theta()) >= 0.0 ? 1.0 : -1.0;
        if (v1.z() * want_z < 0.0) v1 = -v1;
    } else if (s_comp < 0.0) {
        v1 = -v1;
    }
    out.theta_mix = std::atan2((v1.x() + v1.y()) / kSqrt2, v1.z());

    // |xi2> = (-cos(Theta)/sqrt(2), -cos(Theta)/sqrt(2), sin(Theta)).
    Eigen::Vector3d v2 = evecs.col(hi);
    double ct = std::cos(out.theta_mix), st = std::sin(out.theta_mix);
    Eigen::Vector3d v2_expected(-ct / kSqrt2, -ct / kSqrt2, st);
    if (v2.dot(v2_expected) < 0.0) v2 = -v2;

    if (v3.x() < 0.0) v3 = -v3;

    out.eigvecs = {v1, v2, v3};
    for (int i = 0; i < 3; ++i) out.energies_ev[i] = out.xi[i] * scale;
    return out;
}

GroundBranch ground_state_branch(double theta) {
    AnalyticSpectrum s = analytic_spectrum(theta);
    if (std::abs(s.xi1 - s.xi3) < 1e-12) return GroundBranch::degenerate;
    return s.xi1 < s.xi3 ? GroundBranch::xi1 : GroundBranch::xi3;
}

}  // namespace ionspin
