// concurrence.hpp — two-qubit density matrices and Wootters concurrence

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "qzc/errors.hpp"
#include "qzc/mat4.hpp"
#include "qzc/model.hpp"

namespace qzc {

// Density matrix over {|e,e>, |e,g>, |g,e>, |g,g>} for the one-excitation
// family: a single excitation shared between the atoms plus ground-state
// weight from whatever already leaked into the cavity.
inline Mat4c density_matrix(complexd u1, complexd u2) {
    const double n = std::norm(u1) + std::norm(u2);
    if (n > 1.0 + 1e-10)
        throw consistency_error("density_matrix: |u1|^2 + |u2|^2 = " + std::to_string(n) +
                                " exceeds 1");
    Mat4c rho;
    rho(1, 1) = std::norm(u1);
    rho(1, 2) = u1 * std::conj(u2);
    rho(2, 1) = std::conj(rho(1, 2));
    rho(2, 2) = std::norm(u2);
    rho(3, 3) = std::max(0.0, 1.0 - n);
    return rho;
}

// sigma_y x sigma_y  conj(rho)  sigma_y x sigma_y, written out elementwise:
// the flip matrix swaps index i -> 3-i and contributes sign (-1,1,1,-1)_i.
inline Mat4c spin_flip(const Mat4c& rho) {
    constexpr std::array<double, 4> sign{-1.0, 1.0, 1.0, -1.0};
    Mat4c out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out(i, j) = sign[static_cast<std::size_t>(i)] * sign[static_cast<std::size_t>(j)] *
                        std::conj(rho(3 - i, 3 - j));
    return out;
}

struct ConcurrenceResult {
    double value = 0.0;
    std::array<double, 4> lambdas{}; // eigenvalues of rho * spin_flip(rho), descending
};

// C = max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) with l_i the
// descending eigenvalues of rho * spin_flip(rho).
inline ConcurrenceResult wootters_concurrence(const Mat4c& rho) {
    if (!is_hermitian(rho, 1e-12))
        throw validation_error("wootters_concurrence: rho is not hermitian within 1e-12");
    if (std::abs(trace(rho) - 1.0) > 1e-12)
        throw validation_error("wootters_concurrence: trace(rho) deviates from 1 beyond 1e-12");

    const auto eig = eigenvalues4_of_product(rho, spin_flip(rho));

    ConcurrenceResult res;
    for (std::size_t i = 0; i < 4; ++i) {
        const complexd l = eig[i];
        if (std::abs(l.imag()) > 1e-9)
            throw numerical_error("wootters_concurrence: eigenvalue " + std::to_string(l.real()) +
                                  " + " + std::to_string(l.imag()) + "i has imaginary part beyond 1e-9");
        double lr = l.real();
        if (lr < 0.0) {
            if (lr < -1e-10)
                throw numerical_error("wootters_concurrence: eigenvalue " + std::to_string(lr) +
                                      " below -1e-10");
            lr = 0.0;
        }
        res.lambdas[i] = lr;
    }
    std::sort(res.lambdas.begin(), res.lambdas.end(), std::greater<double>());
    const double c = std::sqrt(res.lambdas[0]) - std::sqrt(res.lambdas[1]) -
                     std::sqrt(res.lambdas[2]) - std::sqrt(res.lambdas[3]);
    res.value = std::max(0.0, c);
    return res;
}

// For the one-excitation family the Wootters formula collapses to
// C = 2 |u1 conj(u2)|; kept separate so the two can cross-check each other.
inline double closed_form_concurrence(complexd u1, complexd u2) {
    const double n = std::norm(u1) + std::norm(u2);
    if (n > 1.0 + 1e-10)
        throw consistency_error("closed_form_concurrence: |u1|^2 + |u2|^2 = " +
                                std::to_string(n) + " exceeds 1");
    return 2.0 * std::abs(u1 * std::conj(u2));
}

} // namespace qzc
