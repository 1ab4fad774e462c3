#include "ionspin/multiplet.hpp"

#include <cmath>
#include <stdexcept>

#include "ionspin/angmom.hpp"

namespace ionspin {

namespace {

constexpr int kDim = 36;

Eigen::MatrixXcd identity(int n) { return Eigen::MatrixXcd::Identity(n, n); }

// Promotes single-spin components to S x l x s. Index 0,1,2 = x,y,z.
struct ProductOperators {
    std::vector<Eigen::MatrixXcd> core;   // S_k x 1 x 1
    std::vector<Eigen::MatrixXcd> orbit;  // 1 x l_k x 1
    std::vector<Eigen::MatrixXcd> spin;   // 1 x 1 x s_k
};

ProductOperators product_operators() {
    SpinOperators core = spin_operators(2.5);
    SpinOperators orbit = spin_operators(1.0);
    SpinOperators spin = spin_operators(0.5);

    auto promote = [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                      const Eigen::MatrixXcd& c) {
        return tensor_product(a, tensor_product(b, c));
    };

    ProductOperators ops;
    const Eigen::MatrixXcd i6 = identity(6), i3 = identity(3), i2 = identity(2);
    for (auto comp : {&SpinOperators::jx, &SpinOperators::jy, &SpinOperators::jz}) {
        ops.core.push_back(promote(core.*comp, i3, i2));
        ops.orbit.push_back(promote(i6, orbit.*comp, i2));
        ops.spin.push_back(promote(i6, i3, spin.*comp));
    }
    return ops;
}

Eigen::MatrixXcd exchange_operator() {
    ProductOperators ops = product_operators();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kDim, kDim);
    for (int k = 0; k < 3; ++k) out += ops.core[k] * ops.spin[k];
    return out;
}

}  // namespace

std::vector<Eigen::MatrixXcd> total_angular_momentum() {
    ProductOperators ops = product_operators();
    std::vector<Eigen::MatrixXcd> total;
    for (int k = 0; k < 3; ++k)
        total.push_back(ops.core[k] + ops.orbit[k] + ops.spin[k]);
    return total;
}

Eigen::MatrixXcd build_spin_hamiltonian(double alpha, double beta) {
    ProductOperators ops = product_operators();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(kDim, kDim);
    for (int k = 0; k < 3; ++k) {
        h += alpha * ops.core[k] * ops.spin[k];
        h += beta * ops.orbit[k] * ops.spin[k];
    }
    return h;
}

MultipletResult analyze_multiplet(const Eigen::MatrixXcd& hamiltonian,
                                  double degeneracy_tol) {
    if (hamiltonian.rows() != kDim || hamiltonian.cols() != kDim)
        throw std::domain_error("analyze_multiplet: expected a 36x36 matrix");
    double scale = std::max(1.0, hamiltonian.cwiseAbs().maxCoeff());
    if ((hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::domain_error("analyze_multiplet: matrix is not Hermitian");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
    const Eigen::VectorXd& energies = solver.eigenvalues();
    const Eigen::MatrixXcd& vectors = solver.eigenvectors();

    // Cluster the sorted eigenvalues by the degeneracy tolerance.
    std::vector<std::pair<int, int>> ranges;  // [first, last) eigenvalue index
    int first = 0;
    bool ambiguous = false;
    for (int i = 1; i <= kDim; ++i) {
        if (i == kDim || energies(i) - energies(i - 1) > degeneracy_tol) {
            ranges.emplace_back(first, i);
            if (i < kDim && energies(i) - energies(i - 1) < 10.0 * degeneracy_tol)
                ambiguous = true;
            first = i;
        }
    }

    // <J^2> and <S.s> per cluster, averaged over the eigenspace.
    std::vector<Eigen::MatrixXcd> jtot = total_angular_momentum();
    Eigen::MatrixXcd j_squared = Eigen::MatrixXcd::Zero(kDim, kDim);
    for (const auto& jk : jtot) j_squared += jk * jk;
    Eigen::MatrixXcd s_dot_s = exchange_operator();

    auto subspace_mean = [&](const Eigen::MatrixXcd& op, int lo, int hi) {
        double acc = 0.0;
        for (int i = lo; i < hi; ++i) {
            Eigen::VectorXcd v = vectors.col(i);
            acc += (v.adjoint() * op * v)(0).real();
        }
        return acc / (hi - lo);
    };

    auto j_label = [](double j2_mean) {
        double j = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * j2_mean));
        double j_rounded = std::round(2.0 * j) / 2.0;
        if (std::abs(j2_mean - j_rounded * (j_rounded + 1.0)) < 1e-6) return j_rounded;
        return -1.0;  // mixed
    };

    MultipletResult result;
    result.clustering_ambiguous = ambiguous;
    for (const auto& [lo, hi] : ranges) {
        double mean_energy = energies.segment(lo, hi - lo).mean();
        result.clusters.push_back(
            {mean_energy, hi - lo, j_label(subspace_mean(j_squared, lo, hi))});
    }

    const auto& [glo, ghi] = ranges.front();
    result.ground_energy = result.clusters.front().energy;
    result.ground_degeneracy = ghi - glo;
    result.ground_j = result.clusters.front().j_assigned;
    result.exchange_expectation = subspace_mean(s_dot_s, glo, ghi);
    return result;
}

}  // namespace ionspin
