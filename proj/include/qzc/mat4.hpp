// mat4.hpp — dense complex 4x4 matrices and a small shifted-QR eigensolver

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <string>

#include "qzc/errors.hpp"
#include "qzc/model.hpp"

namespace qzc {

struct Mat4c {
    std::array<complexd, 16> a{};

    complexd& operator()(int i, int j) { return a[static_cast<std::size_t>(4 * i + j)]; }
    const complexd& operator()(int i, int j) const {
        return a[static_cast<std::size_t>(4 * i + j)];
    }

    static Mat4c zero() { return Mat4c{}; }

    static Mat4c identity() {
        Mat4c m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline Mat4c operator*(const Mat4c& x, const Mat4c& y) {
    Mat4c z;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const complexd xik = x(i, k);
            for (int j = 0; j < 4; ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

inline complexd trace(const Mat4c& m) { return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3); }

inline Mat4c adjoint(const Mat4c& m) {
    Mat4c t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t(i, j) = std::conj(m(j, i));
    return t;
}

inline double max_abs(const Mat4c& m) {
    double v = 0.0;
    for (const auto& e : m.a) v = std::max(v, std::abs(e));
    return v;
}

inline bool is_hermitian(const Mat4c& m, double tol) {
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    return true;
}

inline std::string format_matrix(const Mat4c& m) {
    std::string out;
    char buf[96];
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            std::snprintf(buf, sizeof buf, "(%.6g,%.6g) ", m(i, j).real(), m(i, j).imag());
            out += buf;
        }
        out += '\n';
    }
    return out;
}

namespace detail {

// The QR machinery is templated on the scalar so the public entry point can
// run it in extended precision: the concurrence formula takes square roots
// of eigenvalues that are structurally zero, and double-precision round-off
// (~1e-16) would surface as sqrt-sized noise (~1e-8).
template <class F>
struct EigWork {
    using C = std::complex<F>;
    std::array<C, 16> h{};

    C& at(int i, int j) { return h[static_cast<std::size_t>(4 * i + j)]; }
};

template <class F>
void hessenberg4(EigWork<F>& w) {
    using C = std::complex<F>;
    for (int c = 0; c < 2; ++c) {
        std::array<C, 4> v{};
        F norm2 = F(0);
        for (int i = c + 1; i < 4; ++i) norm2 += std::norm(w.at(i, c));
        const F alpha = std::sqrt(norm2);
        if (alpha == F(0)) continue;
        const C x0 = w.at(c + 1, c);
        const F ax0 = std::abs(x0);
        const C phase = (ax0 > F(0)) ? x0 / ax0 : C(1);
        v[static_cast<std::size_t>(c + 1)] = x0 + phase * alpha;
        for (int i = c + 2; i < 4; ++i) v[static_cast<std::size_t>(i)] = w.at(i, c);
        F vnorm2 = F(0);
        for (int i = c + 1; i < 4; ++i) vnorm2 += std::norm(v[static_cast<std::size_t>(i)]);
        if (vnorm2 == F(0)) continue;

        for (int j = 0; j < 4; ++j) { // left
            C dot(0);
            for (int i = c + 1; i < 4; ++i) dot += std::conj(v[static_cast<std::size_t>(i)]) * w.at(i, j);
            const C f = F(2) * dot / vnorm2;
            for (int i = c + 1; i < 4; ++i) w.at(i, j) -= f * v[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < 4; ++i) { // right
            C dot(0);
            for (int j = c + 1; j < 4; ++j) dot += w.at(i, j) * v[static_cast<std::size_t>(j)];
            const C f = F(2) * dot / vnorm2;
            for (int j = c + 1; j < 4; ++j) w.at(i, j) -= f * std::conj(v[static_cast<std::size_t>(j)]);
        }
        for (int i = c + 2; i < 4; ++i) w.at(i, c) = C(0);
    }
}

template <class F>
std::complex<F> wilkinson_shift4(EigWork<F>& w, int m) {
    using C = std::complex<F>;
    const C a = w.at(m - 1, m - 1), b = w.at(m - 1, m), c = w.at(m, m - 1), d = w.at(m, m);
    const C half = (a - d) / F(2);
    const C disc = std::sqrt(half * half + b * c);
    const C mu1 = d + half + disc;
    const C mu2 = d + half - disc;
    return (std::abs(mu1 - d) < std::abs(mu2 - d)) ? mu1 : mu2;
}

template <class F>
std::array<std::complex<F>, 4> eigenvalues4_impl(EigWork<F>& w, int max_iter, bool& converged) {
    using C = std::complex<F>;
    struct Rot {
        F c = F(1);
        C s{};
    };
    const auto make_rot = [](C x, C y) {
        Rot g;
        const F ax = std::abs(x), ay = std::abs(y);
        if (ay == F(0)) return g;
        if (ax == F(0)) {
            g.c = F(0);
            g.s = std::conj(y) / ay;
            return g;
        }
        const F d = std::hypot(ax, ay);
        g.c = ax / d;
        g.s = (x / ax) * std::conj(y) / d;
        return g;
    };

    hessenberg4(w);

    F scale = F(0);
    for (const auto& e : w.h) scale = std::max(scale, std::abs(e));
    if (scale == F(0)) scale = F(1);
    const F tiny = F(8) * std::numeric_limits<F>::epsilon();
    const F floor = tiny * scale * F(1e-2);

    converged = true;
    int m = 3, iter = 0, since_deflation = 0;
    while (m > 0) {
        for (int i = 1; i <= m; ++i) {
            const F bound = tiny * (std::abs(w.at(i - 1, i - 1)) + std::abs(w.at(i, i))) + floor;
            if (std::abs(w.at(i, i - 1)) <= bound) w.at(i, i - 1) = C(0);
        }
        if (w.at(m, m - 1) == C(0)) {
            --m;
            since_deflation = 0;
            continue;
        }
        int l = m;
        while (l > 0 && w.at(l, l - 1) != C(0)) --l;

        if (++iter > max_iter) {
            converged = false;
            break;
        }

        C mu = wilkinson_shift4(w, m);
        if (++since_deflation % 12 == 0) // rare stagnation: kick the shift
            mu += std::abs(w.at(m, m - 1)) * C(F(1.5), F(0.5));

        std::array<Rot, 3> rots{};
        for (int i = l; i <= m; ++i) w.at(i, i) -= mu;
        for (int i = l; i < m; ++i) {
            const Rot g = make_rot(w.at(i, i), w.at(i + 1, i));
            rots[static_cast<std::size_t>(i - l)] = g;
            for (int j = i; j < 4; ++j) {
                const C t0 = w.at(i, j), t1 = w.at(i + 1, j);
                w.at(i, j) = g.c * t0 + g.s * t1;
                w.at(i + 1, j) = -std::conj(g.s) * t0 + g.c * t1;
            }
            w.at(i + 1, i) = C(0);
        }
        for (int i = l; i < m; ++i) { // right-multiply by the adjoints
            const Rot g = rots[static_cast<std::size_t>(i - l)];
            for (int k = 0; k <= std::min(i + 1, m); ++k) {
                const C t0 = w.at(k, i), t1 = w.at(k, i + 1);
                w.at(k, i) = g.c * t0 + std::conj(g.s) * t1;
                w.at(k, i + 1) = -g.s * t0 + g.c * t1;
            }
        }
        for (int i = l; i <= m; ++i) w.at(i, i) += mu;
    }

    return {w.at(0, 0), w.at(1, 1), w.at(2, 2), w.at(3, 3)};
}

inline std::array<complexd, 4> solve_extended(EigWork<long double>& w, int max_iter,
                                              const Mat4c& reported) {
    bool converged = false;
    const auto eig = eigenvalues4_impl(w, max_iter, converged);
    if (!converged)
        throw numerical_error("eigenvalues4: QR iteration did not converge for\n" +
                              format_matrix(reported));
    std::array<complexd, 4> out;
    for (std::size_t i = 0; i < 4; ++i)
        out[i] = complexd(static_cast<double>(eig[i].real()), static_cast<double>(eig[i].imag()));
    return out;
}

} // namespace detail

// Eigenvalues of a general complex 4x4 matrix. Hessenberg reduction plus
// Wilkinson-shifted QR, run internally in extended precision; order of the
// returned values is unspecified.
inline std::array<complexd, 4> eigenvalues4(const Mat4c& m, int max_iter = 240) {
    detail::EigWork<long double> w;
    for (std::size_t i = 0; i < 16; ++i)
        w.h[i] = std::complex<long double>(m.a[i].real(), m.a[i].imag());
    return detail::solve_extended(w, max_iter, m);
}

// Eigenvalues of the product x*y with the product itself accumulated in
// extended precision. Forming the product in double would smear rows that
// are exactly zero by ~1e-16, and square roots downstream would amplify
// that to ~1e-8; accumulating here keeps structural zeros exact.
inline std::array<complexd, 4> eigenvalues4_of_product(const Mat4c& x, const Mat4c& y,
                                                       int max_iter = 240) {
    using CL = std::complex<long double>;
    detail::EigWork<long double> w;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CL acc(0);
            for (int k = 0; k < 4; ++k)
                acc += CL(x(i, k).real(), x(i, k).imag()) * CL(y(k, j).real(), y(k, j).imag());
            w.at(i, j) = acc;
        }
    return detail::solve_extended(w, max_iter, x * y);
}

} // namespace qzc
