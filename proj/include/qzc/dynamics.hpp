// dynamics.hpp — closed-form single-excitation evolution and its concurrence
//
// Inside the one-excitation sector the sub-radiant collective amplitude is
// frozen while the super-radiant one obeys the damped-oscillator equation
//   u'' + kappa u' + g_total^2 u = 0,   u(0) = 1, u'(0) = 0,
// whose solution is the survival amplitude eps(t) below. Atomic amplitudes
// for any initial state follow by projecting onto the collective basis.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "qzc/errors.hpp"
#include "qzc/model.hpp"

namespace qzc {

// sqrt(kappa^2 - 4 g_total^2): real when overdamped, imaginary when the
// exchange oscillates. Returned as complex so callers need not branch.
inline complexd internal_omega(const SystemParams& p) {
    const double disc = p.kappa * p.kappa - 4.0 * p.g_total * p.g_total;
    return std::sqrt(complexd(disc, 0.0));
}

// eps(t) = e^{-kappa t/2} [ cosh(Omega t/2) + (kappa/Omega) sinh(Omega t/2) ]
// with Omega = internal_omega. Always real; |eps| <= 1 for t >= 0.
inline double survival_amplitude(const SystemParams& p, double t) {
    if (!(t >= 0.0))
        throw validation_error("t must be >= 0, got " + std::to_string(t));
    const double k = p.kappa, g = p.g_total;
    const double disc = k * k - 4.0 * g * g;
    const double kt = k * t;

    if (std::abs(disc) < 1e-18 * k * k) {
        // critically damped: eps = e^{-kt/2} (1 + kt/2)
        return std::exp(-0.5 * kt) * (1.0 + 0.5 * kt);
    }
    if (disc > 0.0) {
        const double om = std::sqrt(disc);
        if (kt > 700.0) {
            // only the slow exponential survives; avoids cosh overflow
            return 0.5 * (1.0 + k / om) * std::exp(0.5 * (om - k) * t);
        }
        const double z = 0.5 * om * t;
        return std::exp(-0.5 * kt) * (std::cosh(z) + (k / om) * std::sinh(z));
    }
    const double om = std::sqrt(-disc);
    const double z = 0.5 * om * t;
    return std::exp(-0.5 * kt) * (std::cos(z) + (k / om) * std::sin(z));
}

// Atomic amplitudes over {|e,g>, |g,e>}: the frozen sub-radiant part plus
// the decaying super-radiant part.
inline std::pair<complexd, complexd> amplitudes(const SystemParams& p, const InitialState& st,
                                                double t) {
    const double eps = survival_amplitude(p, t);
    const complexd plus = st.beta_plus * eps;
    const complexd u1 = p.r2 * st.beta_minus + p.r1 * plus;
    const complexd u2 = -p.r1 * st.beta_minus + p.r2 * plus;
    return {u1, u2};
}

// C(t) = 2 |u1 conj(u2)| for the one-excitation family; equals the full
// Wootters concurrence of the corresponding density matrix.
inline double concurrence_from_amplitudes(complexd u1, complexd u2) {
    return 2.0 * std::abs(u1 * std::conj(u2));
}

// Late-time concurrence: only the sub-radiant component survives.
//   C_s = 2 r1 r2 |beta_minus|^2
inline double stationary_concurrence(const InitialState& st, double r1) {
    if (!(r1 >= 0.0 && r1 <= 1.0))
        throw validation_error("r1 must lie in [0, 1], got " + std::to_string(r1));
    const double r2 = std::sqrt(1.0 - r1 * r1);
    return 2.0 * r1 * r2 * std::norm(st.beta_minus);
}

struct Trajectory {
    std::vector<double> times;
    std::vector<complexd> u1, u2;
    std::vector<double> eps;
    std::vector<double> concurrence;
};

inline Trajectory trajectory(const SystemParams& p, const InitialState& st, double t_max,
                             int n_samples) {
    if (!(t_max > 0.0))
        throw validation_error("t_max must be > 0, got " + std::to_string(t_max));
    if (n_samples < 2)
        throw validation_error("n_samples must be >= 2, got " + std::to_string(n_samples));
    Trajectory tr;
    const std::size_t n = static_cast<std::size_t>(n_samples);
    tr.times.resize(n);
    tr.u1.resize(n);
    tr.u2.resize(n);
    tr.eps.resize(n);
    tr.concurrence.resize(n);
    const double dt = t_max / static_cast<double>(n_samples - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = dt * static_cast<double>(i);
        tr.times[i] = t;
        tr.eps[i] = survival_amplitude(p, t);
        const complexd plus = st.beta_plus * tr.eps[i];
        tr.u1[i] = p.r2 * st.beta_minus + p.r1 * plus;
        tr.u2[i] = -p.r1 * st.beta_minus + p.r2 * plus;
        tr.concurrence[i] = concurrence_from_amplitudes(tr.u1[i], tr.u2[i]);
    }
    return tr;
}

struct StationaryMax {
    double r1_star = 0.0;
    double c_star = 0.0;
};

// Maximise C_s over r1 in [0, 1] for fixed (s, phi): coarse scan, then
// golden-section, then two parabolic refinements to squeeze the flat top.
inline StationaryMax max_stationary_concurrence(double s, double phi) {
    const auto f = [&](double r1) {
        return stationary_concurrence(initial_state(s, phi, r1), r1);
    };

    const int coarse = 1000;
    double best_x = 0.0, best_f = f(0.0);
    for (int i = 1; i <= coarse; ++i) {
        const double x = static_cast<double>(i) / coarse;
        const double fx = f(x);
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
        }
    }
    double lo = std::max(0.0, best_x - 1.0 / coarse);
    double hi = std::min(1.0, best_x + 1.0 / coarse);

    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > 1e-11) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = f(x1);
        }
    }
    double x = 0.5 * (lo + hi);

    // symmetric three-point parabola: kills the O(h^2) bias of the bracket
    for (const double h : {1e-5, 1e-6}) {
        if (x - h < 0.0 || x + h > 1.0) continue;
        const double fl = f(x - h), f0 = f(x), fr = f(x + h);
        const double denom = fr - 2.0 * f0 + fl;
        if (denom < 0.0) {
            const double cand = x + 0.5 * h * (fl - fr) / denom;
            if (cand > 0.0 && cand < 1.0 && std::abs(cand - x) <= h) x = cand;
        }
    }

    StationaryMax out;
    out.r1_star = x;
    out.c_star = f(x);
    return out;
}

} // namespace qzc
