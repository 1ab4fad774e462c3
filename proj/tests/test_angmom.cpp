#include <doctest.h>

#include <complex>
#include <random>

#include "ionspin/angmom.hpp"

using namespace ionspin;
using Eigen::MatrixXcd;
using std::complex;

namespace {

double max_abs(const MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// [jx, jy] = i jz and cyclic permutations; Casimir jx^2+jy^2+jz^2 = j(j+1).
void check_su2_algebra(const SpinOperators& ops, double tol = 1e-12) {
    const complex<double> i(0.0, 1.0);
    auto comm = [](const MatrixXcd& a, const MatrixXcd& b) { return a * b - b * a; };

    CHECK(max_abs(ops.jx - ops.jx.adjoint()) < tol);
    CHECK(max_abs(ops.jy - ops.jy.adjoint()) < tol);
    CHECK(max_abs(ops.jz - ops.jz.adjoint()) < tol);

    CHECK(max_abs(comm(ops.jx, ops.jy) - i * ops.jz) < tol);
    CHECK(max_abs(comm(ops.jy, ops.jz) - i * ops.jx) < tol);
    CHECK(max_abs(comm(ops.jz, ops.jx) - i * ops.jy) < tol);

    MatrixXcd casimir = ops.jx * ops.jx + ops.jy * ops.jy + ops.jz * ops.jz;
    MatrixXcd expected =
        ops.j * (ops.j + 1.0) * MatrixXcd::Identity(ops.dim(), ops.dim());
    CHECK(max_abs(casimir - expected) < tol);
}

}  // namespace

TEST_CASE("spin one half is Pauli over two") {
    SpinOperators ops = spin_operators(0.5);
    CHECK(ops.dim() == 2);
    CHECK(ops.jz(0, 0) == complex<double>(0.5, 0.0));
    CHECK(ops.jz(1, 1) == complex<double>(-0.5, 0.0));
    CHECK(ops.jx(0, 1) == complex<double>(0.5, 0.0));
    CHECK(ops.jy(0, 1) == complex<double>(0.0, -0.5));
}

TEST_CASE("spin one jz is diag(1, 0, -1)") {
    SpinOperators ops = spin_operators(1.0);
    CHECK(ops.dim() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(ops.jz(i, i) == complex<double>(1.0 - i, 0.0));
}

TEST_CASE("algebra holds for all spins used in the artifact") {
    for (double j : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5}) check_su2_algebra(spin_operators(j));
}

TEST_CASE("non-half-integer spin rejected") {
    CHECK_THROWS_AS(spin_operators(0.3), std::domain_error);
    CHECK_THROWS_AS(spin_operators(-0.5), std::domain_error);
}

TEST_CASE("cartesian J=1 operators annihilate their own axis") {
    SpinOperators ops = cartesian_j1_operators();
    CHECK(ops.basis_label == BasisLabel::cartesian_xyz);
    Eigen::Vector3cd x(1, 0, 0), y(0, 1, 0), z(0, 0, 1);
    CHECK((ops.jx * x).norm() == 0.0);
    CHECK((ops.jy * y).norm() == 0.0);
    CHECK((ops.jz * z).norm() == 0.0);

    // epsilon-tensor entries: (Jx)_yz = -i, (Jx)_zy = +i.
    CHECK(ops.jx(1, 2) == complex<double>(0.0, -1.0));
    CHECK(ops.jx(2, 1) == complex<double>(0.0, 1.0));

    check_su2_algebra(ops);
}

TEST_CASE("cartesian and m-basis J=1 operators are unitarily equivalent") {
    SpinOperators cart = cartesian_j1_operators();
    SpinOperators std_ops = spin_operators(1.0);
    for (auto comp : {&SpinOperators::jx, &SpinOperators::jy, &SpinOperators::jz}) {
        Eigen::SelfAdjointEigenSolver<MatrixXcd> a(cart.*comp);
        Eigen::SelfAdjointEigenSolver<MatrixXcd> b(std_ops.*comp);
        CHECK((a.eigenvalues() - b.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
        // spectrum is exactly {-1, 0, 1}
        CHECK(a.eigenvalues()(0) == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(std::abs(a.eigenvalues()(1)) < 1e-12);
        CHECK(a.eigenvalues()(2) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("tensor product basics") {
    MatrixXcd i2 = MatrixXcd::Identity(2, 2), i3 = MatrixXcd::Identity(3, 3);
    CHECK(max_abs(tensor_product(i2, i3) - MatrixXcd::Identity(6, 6)) == 0.0);

    MatrixXcd sz(2, 2);
    sz << 1, 0, 0, -1;
    MatrixXcd kron = tensor_product(sz, i2);
    Eigen::Vector4cd diag(1, 1, -1, -1);
    CHECK(max_abs(kron - MatrixXcd(diag.asDiagonal())) == 0.0);

    MatrixXcd rect(2, 3);
    CHECK_THROWS_AS(tensor_product(rect, i2), std::domain_error);
}

TEST_CASE("trace of a tensor product factorizes") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    auto random_hermitian = [&](int n) {
        MatrixXcd m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = complex<double>(dist(rng), dist(rng));
        return MatrixXcd(0.5 * (m + m.adjoint()));
    };
    for (int trial = 0; trial < 20; ++trial) {
        MatrixXcd a = random_hermitian(3), b = random_hermitian(4);
        complex<double> lhs = tensor_product(a, b).trace();
        complex<double> rhs = a.trace() * b.trace();
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}
