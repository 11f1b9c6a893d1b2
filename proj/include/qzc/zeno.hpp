// zeno.hpp — entanglement protection by repeated nonselective measurement
//
// Measuring whether the excitation is still atomic every T time units resets
// the cavity memory without touching the atomic amplitudes, so after N
// rounds the super-radiant component has simply been multiplied by eps(T)^N.
// The effective decay rate lambda_z(T) = -ln eps(T)^2 / T vanishes as T -> 0.

#pragma once

#include <cmath>
#include <string>

#include "qzc/dynamics.hpp"
#include "qzc/errors.hpp"
#include "qzc/model.hpp"
#include "qzc/volterra.hpp"

namespace qzc {

struct ZenoSchedule {
    double interval = 0.0; // T
    long count = 0;        // N

    double total_time() const { return interval * static_cast<double>(count); }
};

inline ZenoSchedule make_zeno_schedule(double interval, long count) {
    if (!(interval > 0.0))
        throw validation_error("interval must be > 0, got " + std::to_string(interval));
    if (count < 1)
        throw validation_error("count must be >= 1, got " + std::to_string(count));
    if (!std::isfinite(interval * static_cast<double>(count)))
        throw validation_error("interval*count must be finite");
    return ZenoSchedule{interval, count};
}

inline double zeno_rate(const SystemParams& p, double T) {
    if (!(T > 0.0))
        throw validation_error("T must be > 0, got " + std::to_string(T));
    const double eps = survival_amplitude(p, T);
    if (eps == 0.0)
        throw singular_rate_error("zeno_rate: measurement interval T = " + std::to_string(T) +
                                  " sits on a node of the survival amplitude");
    // -ln(eps^2)/T, written to survive eps^2 underflowing
    return -2.0 * std::log(std::abs(eps)) / T;
}

inline double zeno_survival(const InitialState& st, const SystemParams& p,
                            const ZenoSchedule& sched) {
    const double lz = zeno_rate(p, sched.interval);
    return std::norm(st.beta_plus) * std::exp(-lz * sched.total_time());
}

inline double zeno_concurrence(const InitialState& st, const SystemParams& p,
                               const ZenoSchedule& sched) {
    const double lz = zeno_rate(p, sched.interval);
    const double en = std::exp(-0.5 * lz * sched.total_time()); // eps(T)^N up to sign
    const complexd plus = st.beta_plus * en;
    const complexd u1 = p.r1 * plus + p.r2 * st.beta_minus;
    const complexd u2 = p.r2 * plus - p.r1 * st.beta_minus;
    return 2.0 * std::abs(u1 * std::conj(u2));
}

struct ZenoResult {
    double lambda_z = 0.0;
    double survival = 0.0;
    double concurrence = 0.0;
};

inline ZenoResult zeno_result(const InitialState& st, const SystemParams& p,
                              const ZenoSchedule& sched) {
    ZenoResult r;
    r.lambda_z = zeno_rate(p, sched.interval);
    r.survival = zeno_survival(st, p, sched);
    r.concurrence = zeno_concurrence(st, p, sched);
    return r;
}

// Protocol simulated mechanically as an oracle for the closed form: evolve
// the coupled (u1, u2, v) system for T, then apply the nonselective
// measurement, which keeps the atomic amplitudes and zeroes the cavity
// memory variable v. Repeat N times and read off the concurrence.
inline double mechanistic_zeno_simulation(const InitialState& st, const SystemParams& p,
                                          const ZenoSchedule& sched, double step) {
    detail::check_volterra_inputs(p, sched.interval, step);
    const long substeps = static_cast<long>(std::ceil(sched.interval / step - 1e-9));
    const double h = sched.interval / static_cast<double>(substeps);

    complexd u1 = st.c01, u2 = st.c02, v = 0.0;
    for (long round = 0; round < sched.count; ++round) {
        for (long i = 0; i < substeps; ++i) detail::rk4_step(p, u1, u2, v, h);
        detail::check_norm(std::norm(u1) + std::norm(u2),
                           sched.interval * static_cast<double>(round + 1));
        v = 0.0; // the measurement: atomic amplitudes survive, memory does not
    }
    return 2.0 * std::abs(u1 * std::conj(u2));
}

// Short-time expansion P(t) = eps^2 ~ 1 - (g_T t)^2 defines the Zeno time.
inline double zeno_time(const SystemParams& p) { return 1.0 / p.g_total; }

} // namespace qzc
