#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ionspin/units.hpp"

namespace ionspin {

// Exponential-overlap model for the splitting of two-ion pair states,
// anchored at 100 meV for 12 Angstrom separation and decaying on the
// bound-hole radius.
struct PairModel {
    double j0 = 0.1;             // eV at the reference separation
    double d0 = 1.2e-9;          // m
    double decay_length = 1.3e-9;  // m
};

inline double exchange_coupling(double d, const PairModel& model = {}) {
    if (!(d > 0.0))
        throw std::domain_error("exchange_coupling: separation must be positive");
    return model.j0 * std::exp(-(d - model.d0) / model.decay_length);
}

// Square-root-of-swap timescale for an exchange splitting J.
inline double entangling_time(double j) {
    if (!(j > 0.0))
        throw std::domain_error("entangling_time: coupling must be positive");
    return std::numbers::pi * constants.hbar / (2.0 * j);
}

}  // namespace ionspin
