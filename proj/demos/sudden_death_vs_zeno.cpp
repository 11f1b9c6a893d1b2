// Prints the headline effect as a table: free evolution drives the
// concurrence of the maximally entangled state to zero in finite time, while
// frequent measurement keeps it pinned near 1.

#include <cstdio>

#include "qzc/dynamics.hpp"
#include "qzc/zeno.hpp"

int main() {
    using namespace qzc;
    const double r1 = M_SQRT1_2;
    const auto p = make_system_params_from_ratio(10.0, r1);
    const auto st = initial_state(0.0, 0.0, r1);

    std::printf("# R = 10, s = 0, phi = 0, r1 = 1/sqrt(2)\n");
    std::printf("%8s %10s %12s %12s %12s\n", "tau", "free C", "kT=0.01", "kT=0.005", "kT=0.001");
    for (int i = 0; i <= 20; ++i) {
        const double tau = 0.05 * i;
        const auto [u1, u2] = amplitudes(p, st, tau);
        std::printf("%8.3f %10.6f", tau, concurrence_from_amplitudes(u1, u2));
        for (const double kT : {0.01, 0.005, 0.001}) {
            const long n = static_cast<long>(tau / kT + 0.5);
            const double c = (n == 0) ? concurrence_from_amplitudes(st.c01, st.c02)
                                      : zeno_concurrence(st, p, ZenoSchedule{kT, n});
            std::printf(" %12.6f", c);
        }
        std::printf("\n");
    }
    return 0;
}
