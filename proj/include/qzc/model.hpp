// model.hpp — cavity/coupling parameters, initial states, collective basis

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "qzc/errors.hpp"

namespace qzc {

using complexd = std::complex<double>;

// Two atoms coupled to one lossy cavity mode. Rates are in consistent
// inverse-time units; everything physical depends on kappa, the collective
// coupling g_total = sqrt(g1^2 + g2^2), and the split r1 = g1/g_total.
struct SystemParams {
    double kappa = 1.0;
    double g_total = 1.0;
    double r1 = 0.0;
    double r2 = 1.0;

    double g1() const { return r1 * g_total; }
    double g2() const { return r2 * g_total; }

    // g_total/kappa; absent in the lossless limit where it diverges.
    std::optional<double> ratio() const {
        if (kappa > 0.0) return g_total / kappa;
        return std::nullopt;
    }

    bool lossless() const { return kappa == 0.0; }
};

inline SystemParams make_system_params(double kappa, double g_total, double r1) {
    if (!(kappa >= 0.0))
        throw validation_error("kappa must be >= 0, got " + std::to_string(kappa));
    if (!(g_total > 0.0))
        throw validation_error("g_total must be > 0, got " + std::to_string(g_total));
    if (!(r1 >= 0.0 && r1 <= 1.0))
        throw validation_error("r1 must lie in [0, 1], got " + std::to_string(r1));
    SystemParams p;
    p.kappa = kappa;
    p.g_total = g_total;
    p.r1 = r1;
    p.r2 = std::sqrt(1.0 - r1 * r1);
    return p;
}

// Convenience: fix kappa = 1 so g_total equals the ratio R directly.
inline SystemParams make_system_params_from_ratio(double R, double r1) {
    if (!(R > 0.0))
        throw validation_error("R must be > 0, got " + std::to_string(R));
    return make_system_params(1.0, R, r1);
}

// Orthonormal pair spanning the single-excitation atomic sector, expressed
// over {|e,g>, |g,e>}. The sub-radiant combination decouples from the cavity.
struct CollectiveBasis {
    std::array<complexd, 2> super_radiant; // ( r1,  r2)
    std::array<complexd, 2> sub_radiant;   // ( r2, -r1)
};

inline CollectiveBasis collective_basis(double r1) {
    if (!(r1 >= 0.0 && r1 <= 1.0))
        throw validation_error("r1 must lie in [0, 1], got " + std::to_string(r1));
    const double r2 = std::sqrt(1.0 - r1 * r1);
    CollectiveBasis b;
    b.super_radiant = {complexd(r1, 0.0), complexd(r2, 0.0)};
    b.sub_radiant = {complexd(r2, 0.0), complexd(-r1, 0.0)};
    return b;
}

// One-excitation initial state  c01|e,g> + c02|g,e>  parametrised by the
// population imbalance s in [-1, 1] and relative phase phi:
//   c01 = sqrt((1-s)/2),  c02 = sqrt((1+s)/2) e^{i phi}.
// beta_plus/beta_minus are its overlaps with the collective basis for the
// coupling split r1 the state will evolve under.
struct InitialState {
    double s = 0.0;
    double phi = 0.0;
    complexd c01{};
    complexd c02{};
    complexd beta_plus{};
    complexd beta_minus{};
};

inline InitialState initial_state(double s, double phi, double r1) {
    if (!(s >= -1.0 && s <= 1.0))
        throw validation_error("s must lie in [-1, 1], got " + std::to_string(s));
    if (!std::isfinite(phi))
        throw validation_error("phi must be finite");
    if (!(r1 >= 0.0 && r1 <= 1.0))
        throw validation_error("r1 must lie in [0, 1], got " + std::to_string(r1));

    const double r2 = std::sqrt(1.0 - r1 * r1);
    InitialState st;
    st.s = s;
    st.phi = phi;
    st.c01 = complexd(std::sqrt((1.0 - s) / 2.0), 0.0);
    st.c02 = std::polar(std::sqrt((1.0 + s) / 2.0), phi);
    st.beta_plus = r1 * st.c01 + r2 * st.c02;
    st.beta_minus = r2 * st.c01 - r1 * st.c02;
    return st;
}

} // namespace qzc
