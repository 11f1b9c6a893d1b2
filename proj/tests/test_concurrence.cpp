#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "qzc/concurrence.hpp"
#include "qzc/dynamics.hpp"
#include "qzc/mat4.hpp"

using namespace qzc;
using Catch::Matchers::WithinAbs;

namespace {
double rnd01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

complexd rnd_unit(std::mt19937_64& rng) {
    return std::polar(1.0, 2.0 * M_PI * rnd01(rng));
}

Mat4c random_matrix(std::mt19937_64& rng, double scale) {
    Mat4c m = Mat4c::zero();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m(i, j) = scale * complexd(2.0 * rnd01(rng) - 1.0, 2.0 * rnd01(rng) - 1.0);
    return m;
}

// power sums of the eigenvalues from traces of matrix powers
std::array<complexd, 4> power_sums(const Mat4c& m) {
    const Mat4c m2 = m * m;
    return {trace(m), trace(m2), trace(m2 * m), trace(m2 * m2)};
}

// elementary symmetric polynomials via Newton's identities
std::array<complexd, 4> elementary_from_power_sums(const std::array<complexd, 4>& p) {
    std::array<complexd, 4> e{};
    e[0] = p[0];
    e[1] = (e[0] * p[0] - p[1]) / 2.0;
    e[2] = (e[1] * p[0] - e[0] * p[1] + p[2]) / 3.0;
    e[3] = (e[2] * p[0] - e[1] * p[1] + e[0] * p[2] - p[3]) / 4.0;
    return e;
}

complexd char_poly(const std::array<complexd, 4>& e, complexd lambda) {
    const complexd l2 = lambda * lambda;
    return l2 * l2 - e[0] * l2 * lambda + e[1] * l2 - e[2] * lambda + e[3];
}
} // namespace

TEST_CASE("eigenvalues of diagonal and triangular matrices") {
    Mat4c d = Mat4c::zero();
    d(0, 0) = complexd(3.0, 0.0);
    d(1, 1) = complexd(-1.0, 2.0);
    d(2, 2) = complexd(0.25, 0.0);
    d(3, 3) = complexd(0.0, -4.0);
    auto ev = eigenvalues4(d);
    std::sort(ev.begin(), ev.end(),
              [](complexd a, complexd b) { return a.real() < b.real(); });
    REQUIRE_THAT(std::abs(ev[0] - complexd(-1.0, 2.0)), WithinAbs(0.0, 1e-13));
    REQUIRE_THAT(std::abs(ev[1] - complexd(0.0, -4.0)), WithinAbs(0.0, 1e-13));
    REQUIRE_THAT(std::abs(ev[2] - complexd(0.25, 0.0)), WithinAbs(0.0, 1e-13));
    REQUIRE_THAT(std::abs(ev[3] - complexd(3.0, 0.0)), WithinAbs(0.0, 1e-13));

    Mat4c u = d;
    u(0, 1) = complexd(5.0, -1.0);
    u(0, 3) = complexd(2.0, 2.0);
    u(1, 2) = complexd(-7.0, 0.5);
    u(2, 3) = complexd(1.0, 1.0);
    auto evu = eigenvalues4(u);
    std::sort(evu.begin(), evu.end(),
              [](complexd a, complexd b) { return a.real() < b.real(); });
    for (int i = 0; i < 4; ++i)
        REQUIRE_THAT(std::abs(evu[i] - ev[i]), WithinAbs(0.0, 1e-12));
}

TEST_CASE("eigenvalues satisfy trace identities and the characteristic polynomial") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        const Mat4c m = random_matrix(rng, 1.0 + 4.0 * rnd01(rng));
        const auto ev = eigenvalues4(m);
        const auto p = power_sums(m);

        std::array<complexd, 4> q{};
        for (const auto& l : ev) {
            q[0] += l;
            q[1] += l * l;
            q[2] += l * l * l;
            q[3] += l * l * l * l;
        }
        const double scale = std::max(1.0, max_abs(m));
        for (int k = 0; k < 4; ++k)
            REQUIRE(std::abs(q[k] - p[k]) <
                    1e-11 * std::pow(scale, static_cast<double>(k + 1)) * 4.0);

        const auto e = elementary_from_power_sums(p);
        for (const auto& l : ev)
            REQUIRE(std::abs(char_poly(e, l)) < 1e-10 * std::pow(scale, 4.0) * 16.0);
    }
}

TEST_CASE("repeated eigenvalues are resolved") {
    Mat4c j = Mat4c::zero();
    for (int i = 0; i < 4; ++i) j(i, i) = complexd(2.0, -1.0);
    j(0, 1) = 1.0;
    j(1, 2) = 1.0;
    for (const auto& l : eigenvalues4(j))
        REQUIRE_THAT(std::abs(l - complexd(2.0, -1.0)), WithinAbs(0.0, 1e-7));
}

TEST_CASE("spin flip is an involution that preserves hermiticity") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 100; ++iter) {
        const complexd a = rnd01(rng) * rnd_unit(rng);
        const complexd b = rnd01(rng) * rnd_unit(rng);
        const double n = std::sqrt(std::norm(a) + std::norm(b)) + 1e-12;
        const auto rho = density_matrix(a / n, b / n);
        const auto flipped = spin_flip(rho);
        REQUIRE(is_hermitian(flipped, 1e-12));
        REQUIRE_THAT(std::abs(trace(flipped) - trace(rho)), WithinAbs(0.0, 1e-12));
        const auto twice = spin_flip(flipped);
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k)
                REQUIRE_THAT(std::abs(twice(i, k) - rho(i, k)), WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("spin flip swaps the excited populations in the one-excitation template") {
    const auto rho = density_matrix(0.6, complexd(0.0, 0.5));
    const auto f = spin_flip(rho);
    REQUIRE_THAT(f(1, 1).real(), WithinAbs(0.25, 1e-15));
    REQUIRE_THAT(f(2, 2).real(), WithinAbs(0.36, 1e-15));
    // the index flip i -> 3-i carries the ground weight to the |e,e> corner
    REQUIRE_THAT(f(0, 0).real(), WithinAbs(rho(3, 3).real(), 1e-15));
    REQUIRE_THAT(std::abs(f(3, 3)), WithinAbs(0.0, 1e-15));
    // coherence picks up conjugation: F(1,2) = conj(rho(2,1)) = rho(1,2)
    REQUIRE_THAT(std::abs(f(1, 2) - rho(1, 2)), WithinAbs(0.0, 1e-15));
}

TEST_CASE("rho rho~ spectrum for the one-excitation family is {4ab, 0, 0, 0}") {
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 200; ++iter) {
        complexd u1 = rnd01(rng) * rnd_unit(rng);
        complexd u2 = rnd01(rng) * rnd_unit(rng);
        const double n2 = std::norm(u1) + std::norm(u2);
        if (n2 > 1.0) {
            u1 /= std::sqrt(n2) * (1.0 + 1e-12);
            u2 /= std::sqrt(n2) * (1.0 + 1e-12);
        }
        const auto rho = density_matrix(u1, u2);
        auto ev = eigenvalues4(rho * spin_flip(rho));
        std::sort(ev.begin(), ev.end(),
                  [](complexd a, complexd b) { return a.real() > b.real(); });
        const double expect = 4.0 * std::norm(u1) * std::norm(u2);
        REQUIRE_THAT(ev[0].real(), WithinAbs(expect, 1e-12));
        for (int k = 1; k < 4; ++k)
            REQUIRE_THAT(std::abs(ev[k]), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("Wootters concurrence on landmark states") {
    SECTION("Bell state") {
        const auto res = wootters_concurrence(density_matrix(M_SQRT1_2, M_SQRT1_2));
        REQUIRE_THAT(res.value, WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(res.lambdas[0], WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(res.lambdas[1], WithinAbs(0.0, 1e-12));
    }
    SECTION("product state") {
        REQUIRE_THAT(wootters_concurrence(density_matrix(1.0, 0.0)).value,
                     WithinAbs(0.0, 1e-12));
    }
    SECTION("maximally mixed one-excitation diagonal") {
        Mat4c rho = Mat4c::zero();
        rho(1, 1) = 0.5;
        rho(2, 2) = 0.5;
        REQUIRE_THAT(wootters_concurrence(rho).value, WithinAbs(0.0, 1e-12));
    }
    SECTION("Werner-like mixture of Bell and ground") {
        // p |psi+><psi+| + (1-p) |gg><gg| has concurrence p for this Bell state
        for (double pmix : {0.2, 0.5, 0.9}) {
            Mat4c rho = Mat4c::zero();
            rho(1, 1) = 0.5 * pmix;
            rho(1, 2) = 0.5 * pmix;
            rho(2, 1) = 0.5 * pmix;
            rho(2, 2) = 0.5 * pmix;
            rho(3, 3) = 1.0 - pmix;
            REQUIRE_THAT(wootters_concurrence(rho).value, WithinAbs(pmix, 1e-12));
        }
    }
}

TEST_CASE("Wootters lambdas are sorted, real, and sum to tr(rho rho~)") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 100; ++iter) {
        complexd u1 = rnd01(rng) * rnd_unit(rng);
        complexd u2 = rnd01(rng) * rnd_unit(rng);
        const double n2 = std::norm(u1) + std::norm(u2);
        if (n2 > 1.0) {
            u1 /= std::sqrt(n2) * (1.0 + 1e-12);
            u2 /= std::sqrt(n2) * (1.0 + 1e-12);
        }
        const auto rho = density_matrix(u1, u2);
        const auto res = wootters_concurrence(rho);
        double sum = 0.0;
        for (int k = 0; k < 4; ++k) {
            REQUIRE(res.lambdas[k] >= 0.0);
            if (k) REQUIRE(res.lambdas[k] <= res.lambdas[k - 1]);
            sum += res.lambdas[k];
        }
        REQUIRE_THAT(sum, WithinAbs(trace(rho * spin_flip(rho)).real(), 1e-11));
        REQUIRE(res.value >= 0.0);
        REQUIRE(res.value <= 1.0 + 1e-12);
    }
}

TEST_CASE("Wootters value agrees with the closed form across the family") {
    std::mt19937_64 rng(43);
    double worst = 0.0;
    for (int iter = 0; iter < 1000; ++iter) {
        complexd u1 = rnd01(rng) * rnd_unit(rng);
        complexd u2 = rnd01(rng) * rnd_unit(rng);
        const double n2 = std::norm(u1) + std::norm(u2);
        if (n2 > 1.0) {
            u1 /= std::sqrt(n2) * (1.0 + 1e-12);
            u2 /= std::sqrt(n2) * (1.0 + 1e-12);
        }
        const double w = wootters_concurrence(density_matrix(u1, u2)).value;
        const double cf = closed_form_concurrence(u1, u2);
        worst = std::max(worst, std::abs(w - cf));
    }
    REQUIRE(worst < 1e-9);
}

TEST_CASE("Wootters concurrence rejects malformed density matrices") {
    Mat4c nonherm = density_matrix(0.6, 0.3);
    nonherm(0, 1) = complexd(0.2, 0.1);
    REQUIRE_THROWS_AS(wootters_concurrence(nonherm), validation_error);

    Mat4c offtrace = density_matrix(0.6, 0.3);
    offtrace(0, 0) = 0.5;
    REQUIRE_THROWS_AS(wootters_concurrence(offtrace), validation_error);
}

TEST_CASE("closed form concurrence validates its inputs") {
    REQUIRE_THROWS_AS(closed_form_concurrence(1.0, 0.1), consistency_error);
    REQUIRE(closed_form_concurrence(0.0, 0.7) == 0.0);
    REQUIRE(closed_form_concurrence(0.6, 0.0) == 0.0);
    REQUIRE_THAT(closed_form_concurrence(M_SQRT1_2, -M_SQRT1_2), WithinAbs(1.0, 1e-15));
}

TEST_CASE("concurrence is invariant under a global phase of either amplitude") {
    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 100; ++iter) {
        const complexd u1 = 0.5 * rnd01(rng) * rnd_unit(rng);
        const complexd u2 = 0.5 * rnd01(rng) * rnd_unit(rng);
        const double base = closed_form_concurrence(u1, u2);
        const complexd ph = rnd_unit(rng);
        REQUIRE_THAT(closed_form_concurrence(u1 * ph, u2), WithinAbs(base, 1e-14));
        REQUIRE_THAT(closed_form_concurrence(u1, u2 * ph), WithinAbs(base, 1e-14));
        // each Wootters value carries ~3e-10 of sqrt-of-near-zero noise
        REQUIRE_THAT(wootters_concurrence(density_matrix(u1 * ph, u2 * ph)).value,
                     WithinAbs(wootters_concurrence(density_matrix(u1, u2)).value, 2e-9));
    }
}

TEST_CASE("concurrence along a dissipative trajectory stays consistent both ways") {
    const auto p = make_system_params(1.0, 5.0, 0.8);
    const auto st = initial_state(0.3, 0.7, 0.8);
    for (int i = 0; i <= 40; ++i) {
        const double t = 0.1 * i;
        const auto [u1, u2] = amplitudes(p, st, t);
        const double cf = concurrence_from_amplitudes(u1, u2);
        REQUIRE_THAT(wootters_concurrence(density_matrix(u1, u2)).value,
                     WithinAbs(cf, 1e-9));
    }
}
