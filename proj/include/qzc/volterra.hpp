// volterra.hpp — independent memory-kernel solvers used to cross-check the
// closed-form dynamics
//
// The exact equations of motion for the atomic amplitudes are
//   u1'(t) = -int_0^t f(t-s) [g1^2 u1(s) + g1 g2 u2(s)] ds
//   u2'(t) = -int_0^t f(t-s) [g1 g2 u1(s) + g2^2 u2(s)] ds
// with f the reservoir correlation function, f(tau) = e^{-kappa tau} for a
// Lorentzian line. Two solvers are provided:
//   solve_volterra            — reduction to a local ODE system (exact for an
//                               exponential kernel) integrated with RK4
//   solve_volterra_quadrature — direct trapezoidal discretisation of the
//                               memory integral with the full history, which
//                               never uses the semigroup structure and so
//                               checks the kernel itself, not just the ODE
// Both are deliberately plain so they stay trustworthy as oracles.

#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qzc/errors.hpp"
#include "qzc/model.hpp"

namespace qzc {

// Lorentzian line shape of the cavity, normalised to unit total weight.
struct SpectralDensity {
    double kappa = 1.0;
    double omega_c = 0.0;

    double value(double omega) const {
        const double d = omega - omega_c;
        return (kappa / M_PI) / (d * d + kappa * kappa);
    }
};

inline SpectralDensity make_spectral_density(double kappa, double omega_c) {
    if (!(kappa > 0.0))
        throw validation_error("kappa must be > 0, got " + std::to_string(kappa));
    if (!std::isfinite(omega_c))
        throw validation_error("omega_c must be finite");
    return SpectralDensity{kappa, omega_c};
}

// Total spectral weight by composite Simpson over dyadically growing
// segments out to 2^21 kappa each side (the neglected tail is ~3e-7).
inline double lorentzian_total_mass(const SpectralDensity& sd) {
    double half = 0.0;
    double a = 0.0, b = sd.kappa;
    for (int seg = 0; seg < 22; ++seg) {
        const int n = 64;
        const double h = (b - a) / n;
        double s = sd.value(sd.omega_c + a) + sd.value(sd.omega_c + b);
        for (int i = 1; i < n; ++i)
            s += sd.value(sd.omega_c + a + i * h) * ((i % 2) ? 4.0 : 2.0);
        half += s * h / 3.0;
        a = b;
        b *= 2.0;
    }
    return 2.0 * half;
}

// Reservoir correlation function f(tau) = int J(w) e^{i (w_c - w) tau} dw by
// composite Simpson on [w_c - cutoff, w_c + cutoff], with a coarse/fine
// refinement self-check. For the Lorentzian the exact answer is e^{-kappa tau}.
inline complexd correlation_function_numeric(const SpectralDensity& sd, double tau, double cutoff,
                                             long n_points) {
    if (!(tau >= 0.0))
        throw validation_error("tau must be >= 0, got " + std::to_string(tau));
    if (!(cutoff >= 50.0 * sd.kappa))
        throw validation_error("cutoff must be >= 50*kappa, got " + std::to_string(cutoff));
    if (n_points < 10000)
        throw validation_error("n_points must be >= 10000, got " + std::to_string(n_points));

    const auto simpson = [&](long n) {
        if (n % 2) ++n;
        const double h = 2.0 * cutoff / static_cast<double>(n);
        double sre = 0.0, sim = 0.0;
        for (long i = 0; i <= n; ++i) {
            const double x = -cutoff + h * static_cast<double>(i); // x = w - w_c
            const double j = (sd.kappa / M_PI) / (x * x + sd.kappa * sd.kappa);
            const double w = (i == 0 || i == n) ? 1.0 : ((i % 2) ? 4.0 : 2.0);
            sre += w * j * std::cos(x * tau);
            sim -= w * j * std::sin(x * tau);
        }
        return complexd(sre, sim) * (h / 3.0);
    };

    const complexd coarse = simpson(n_points / 2);
    const complexd fine = simpson(n_points);
    if (std::abs(fine - coarse) > 1e-6)
        throw tolerance_failure("correlation_function_numeric: refinement changed the result by " +
                                std::to_string(std::abs(fine - coarse)) +
                                ", raise cutoff or n_points");
    return fine;
}

struct VolterraSolution {
    std::vector<double> times;
    std::vector<complexd> u1, u2;
    double step = 0.0;
};

namespace detail {

inline void check_volterra_inputs(const SystemParams& p, double t_max, double step) {
    if (p.lossless())
        throw validation_error("kappa must be > 0 for the memory-kernel solvers");
    if (!(t_max > 0.0))
        throw validation_error("t_max must be > 0, got " + std::to_string(t_max));
    const double bound = std::min(1.0 / p.kappa, 1.0 / p.g_total) / 50.0;
    if (!(step > 0.0) || step > bound * (1.0 + 1e-12))
        throw validation_error("step must lie in (0, min(1/kappa, 1/g_total)/50]; got " +
                               std::to_string(step) + ", bound " + std::to_string(bound));
}

inline void check_norm(double n, double t) {
    if (n > 1.0 + 1e-6)
        throw instability_error("amplitude norm " + std::to_string(n) + " exceeded 1 at t = " +
                                std::to_string(t) + "; reduce the step");
}

// One RK4 step of the local system  u1' = -g1 v, u2' = -g2 v,
// v' = -kappa v + g1 u1 + g2 u2  (v is the cavity memory variable).
inline void rk4_step(const SystemParams& p, complexd& u1, complexd& u2, complexd& v, double h) {
    const double g1 = p.g1(), g2 = p.g2(), k = p.kappa;
    const auto dv = [&](complexd a1, complexd a2, complexd av) { return -k * av + g1 * a1 + g2 * a2; };

    const complexd k1u1 = -g1 * v, k1u2 = -g2 * v, k1v = dv(u1, u2, v);
    const complexd k2u1 = -g1 * (v + 0.5 * h * k1v), k2u2 = -g2 * (v + 0.5 * h * k1v),
                   k2v = dv(u1 + 0.5 * h * k1u1, u2 + 0.5 * h * k1u2, v + 0.5 * h * k1v);
    const complexd k3u1 = -g1 * (v + 0.5 * h * k2v), k3u2 = -g2 * (v + 0.5 * h * k2v),
                   k3v = dv(u1 + 0.5 * h * k2u1, u2 + 0.5 * h * k2u2, v + 0.5 * h * k2v);
    const complexd k4u1 = -g1 * (v + h * k3v), k4u2 = -g2 * (v + h * k3v),
                   k4v = dv(u1 + h * k3u1, u2 + h * k3u2, v + h * k3v);

    u1 += (h / 6.0) * (k1u1 + 2.0 * k2u1 + 2.0 * k3u1 + k4u1);
    u2 += (h / 6.0) * (k1u2 + 2.0 * k2u2 + 2.0 * k3u2 + k4u2);
    v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
}

} // namespace detail

// ODE-reduction oracle: introduce v(t) = int_0^t e^{-kappa(t-s)} w(s) ds with
// w = g1 u1 + g2 u2, which turns the integro-differential system into three
// coupled local equations, then integrate with classical RK4.
inline VolterraSolution solve_volterra(const SystemParams& p, const InitialState& st, double t_max,
                                       double step) {
    detail::check_volterra_inputs(p, t_max, step);
    const long n = static_cast<long>(std::ceil(t_max / step - 1e-9));
    const double h = t_max / static_cast<double>(n);

    VolterraSolution sol;
    sol.step = h;
    sol.times.reserve(static_cast<std::size_t>(n) + 1);
    sol.u1.reserve(static_cast<std::size_t>(n) + 1);
    sol.u2.reserve(static_cast<std::size_t>(n) + 1);

    complexd u1 = st.c01, u2 = st.c02, v = 0.0;
    sol.times.push_back(0.0);
    sol.u1.push_back(u1);
    sol.u2.push_back(u2);
    for (long i = 0; i < n; ++i) {
        detail::rk4_step(p, u1, u2, v, h);
        const double t = h * static_cast<double>(i + 1);
        detail::check_norm(std::norm(u1) + std::norm(u2), t);
        sol.times.push_back(t);
        sol.u1.push_back(u1);
        sol.u2.push_back(u2);
    }
    return sol;
}

// History-quadrature oracle: trapezoidal discretisation of the memory
// integral over the full past (O(n^2) work) with a Heun predictor-corrector.
// The kernel enters only through a pointwise table of values at the grid
// lags, so nothing here relies on f being an exponential.
//
// Both atomic derivatives share one scalar memory integral
//   I(t) = int_0^t f(t-s) w(s) ds,  w = g1 u1 + g2 u2,
// and the corrected-history integral at the new time equals the predictor
// integral plus an endpoint correction, which keeps the cost at one O(n)
// sum per step.
inline VolterraSolution solve_volterra_quadrature(const SystemParams& p, const InitialState& st,
                                                  double t_max, double step) {
    detail::check_volterra_inputs(p, t_max, step);
    const long n = static_cast<long>(std::ceil(t_max / step - 1e-9));
    const double h = t_max / static_cast<double>(n);
    const double g1 = p.g1(), g2 = p.g2();
    const std::size_t un = static_cast<std::size_t>(n);

    std::vector<double> kern(un + 1); // f at the grid lags
    for (std::size_t m = 0; m <= un; ++m)
        kern[m] = std::exp(-p.kappa * h * static_cast<double>(m));

    // w stored twice, forward and reversed, so the lag sum walks two forward
    // contiguous arrays
    std::vector<double> wre(un + 1), wim(un + 1), vre(un + 1), vim(un + 1);

    VolterraSolution sol;
    sol.step = h;
    sol.times.resize(un + 1);
    sol.u1.resize(un + 1);
    sol.u2.resize(un + 1);

    complexd u1 = st.c01, u2 = st.c02;
    complexd w = g1 * u1 + g2 * u2;
    complexd integral = 0.0; // trapezoid of f(t_i - s) w(s) over [0, t_i]
    wre[0] = w.real();
    wim[0] = w.imag();
    vre[un] = w.real();
    vim[un] = w.imag();
    sol.times[0] = 0.0;
    sol.u1[0] = u1;
    sol.u2[0] = u2;

    for (long i = 0; i < n; ++i) {
        const std::size_t ui = static_cast<std::size_t>(i);
        const complexd du1 = -g1 * integral;
        const complexd du2 = -g2 * integral;

        const complexd u1p = u1 + h * du1;
        const complexd u2p = u2 + h * du2;
        const complexd wp = g1 * u1p + g2 * u2p;

        // trapezoid over [0, t_{i+1}]: half-weight endpoints at s=0 and s=t_{i+1}
        double sre = 0.0, sim = 0.0;
        const std::size_t base = un - ui - 1; // vre[base + j] = wre[i + 1 - j]
        const double* kr = kern.data();
        const double* ar = vre.data() + base;
        const double* ai = vim.data() + base;
        for (std::size_t j = 1; j <= ui; ++j) {
            sre += kr[j] * ar[j];
            sim += kr[j] * ai[j];
        }
        sre += 0.5 * kern[ui + 1] * wre[0];
        sim += 0.5 * kern[ui + 1] * wim[0];
        const complexd ipred = h * complexd(sre + 0.5 * wp.real(), sim + 0.5 * wp.imag());

        const complexd du1p = -g1 * ipred;
        const complexd du2p = -g2 * ipred;
        u1 += 0.5 * h * (du1 + du1p);
        u2 += 0.5 * h * (du2 + du2p);
        w = g1 * u1 + g2 * u2;
        integral = ipred + 0.5 * h * (w - wp);

        wre[ui + 1] = w.real();
        wim[ui + 1] = w.imag();
        vre[base] = w.real();
        vim[base] = w.imag();

        const double t = h * static_cast<double>(i + 1);
        detail::check_norm(std::norm(u1) + std::norm(u2), t);
        sol.times[ui + 1] = t;
        sol.u1[ui + 1] = u1;
        sol.u2[ui + 1] = u2;
    }
    return sol;
}

} // namespace qzc
