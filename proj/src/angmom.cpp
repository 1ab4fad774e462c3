#include "ionspin/angmom.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace ionspin {

using std::complex;

SpinOperators spin_operators(double j) {
    double twice_j = 2.0 * j;
    if (j < 0.0 || std::abs(twice_j - std::round(twice_j)) > 1e-9)
        throw std::domain_error("spin_operators: 2j must be a non-negative integer");

    int dim = static_cast<int>(std::round(twice_j)) + 1;
    Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd jplus = Eigen::MatrixXcd::Zero(dim, dim);

    // Row/column i holds m = j - i.
    for (int i = 0; i < dim; ++i) {
        double m = j - i;
        jz(i, i) = m;
        if (i > 0)  // J+|j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>
            jplus(i - 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    Eigen::MatrixXcd jminus = jplus.adjoint();

    SpinOperators ops;
    ops.j = j;
    ops.jx = 0.5 * (jplus + jminus);
    ops.jy = complex<double>(0.0, -0.5) * (jplus - jminus);
    ops.jz = jz;
    ops.basis_label = BasisLabel::standard_m_basis;
    return ops;
}

SpinOperators cartesian_j1_operators() {
    const complex<double> mi(0.0, -1.0);  // -i
    Eigen::MatrixXcd jx = Eigen::MatrixXcd::Zero(3, 3);
    Eigen::MatrixXcd jy = Eigen::MatrixXcd::Zero(3, 3);
    Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(3, 3);

    // (J_a)_bc = -i eps_abc, rows/columns ordered X,Y,Z.
    jx(1, 2) = mi;
    jx(2, 1) = -mi;
    jy(2, 0) = mi;
    jy(0, 2) = -mi;
    jz(0, 1) = mi;
    jz(1, 0) = -mi;

    return SpinOperators{1.0, jx, jy, jz, BasisLabel::cartesian_xyz};
}

Eigen::MatrixXcd tensor_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw std::domain_error("tensor_product: operators must be square");

    const auto na = a.rows();
    const auto nb = b.rows();
    Eigen::MatrixXcd out(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; ++i)
        for (Eigen::Index k = 0; k < na; ++k)
            out.block(i * nb, k * nb, nb, nb) = a(i, k) * b;
    return out;
}

}  // namespace ionspin
