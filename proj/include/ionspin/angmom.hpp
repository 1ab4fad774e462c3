#pragma once

#include <Eigen/Dense>

namespace ionspin {

enum class BasisLabel {
    standard_m_basis,  // |j,m> with m decreasing along the diagonal
    cartesian_xyz,     // J=1 basis |X>,|Y>,|Z> with J_a|a> = 0
};

// Angular-momentum component matrices for a single spin, entries in units
// of hbar.
struct SpinOperators {
    double j;
    Eigen::MatrixXcd jx, jy, jz;
    BasisLabel basis_label;

    int dim() const { return static_cast<int>(jx.rows()); }
};

// Ladder-operator construction in the |j,m> basis (m decreasing).
// Throws std::domain_error unless 2j is a non-negative integer.
SpinOperators spin_operators(double j);

// J=1 operators in the |X>,|Y>,|Z> basis: (J_a)_bc = -i eps_abc with
// eps_xyz = +1.
SpinOperators cartesian_j1_operators();

// Kronecker product of two square operators; the first factor is the
// slow (most significant) index.
Eigen::MatrixXcd tensor_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace ionspin
