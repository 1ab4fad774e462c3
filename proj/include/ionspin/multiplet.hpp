#pragma once

#include <vector>

#include <Eigen/Dense>

namespace ionspin {

// One degenerate cluster of the 36-level spectrum.
struct MultipletCluster {
    double energy;     // eV, mean over the cluster
    int multiplicity;
    double j_assigned;  // total-J label from <J^2>; -1 when mixed
};

struct MultipletResult {
    std::vector<MultipletCluster> clusters;  // sorted by energy
    double ground_energy;                    // eV
    int ground_degeneracy;
    double ground_j;               // from <J^2> = J(J+1); -1 when mixed
    double exchange_expectation;   // <S.s> over the ground space, hbar^2 units
    bool clustering_ambiguous;     // a boundary gap fell below 10x the tolerance
};

// H = alpha S.s + beta l.s on the ordered product space
// S (dim 6) x l (dim 3) x s (dim 2), m decreasing within each factor.
Eigen::MatrixXcd build_spin_hamiltonian(double alpha, double beta);

// Full eigendecomposition with degeneracy clustering and total-J labeling.
// A cluster is labeled only when |<J^2> - J(J+1)| < 1e-6 for some J; it is
// never rounded to the nearest J, a mismatch reports the -1 "mixed" marker
// instead. Throws std::domain_error if H is not Hermitian 36x36.
MultipletResult analyze_multiplet(const Eigen::MatrixXcd& hamiltonian,
                                  double degeneracy_tol = 1e-9);

// Total angular momentum components S_k + l_k + s_k promoted to the
// 36-dimensional product space, ordered (x, y, z).
std::vector<Eigen::MatrixXcd> total_angular_momentum();

}  // namespace ionspin
