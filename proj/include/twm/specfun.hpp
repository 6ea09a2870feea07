#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "twm/common.hpp"

namespace twm {

// ---------------------------------------------------------------------------
// Bernoulli numbers B_2 .. B_24, exact
// ---------------------------------------------------------------------------

struct BernoulliTable {
    // B_{2k} = num[k-1] / den[k-1], k = 1..12
    static constexpr std::array<std::int64_t, 12> num = {
        1, -1, 1, -1, 5, -691, 7, -3617, 43867, -174611, 854513, -236364091};
    static constexpr std::array<std::int64_t, 12> den = {
        6, 30, 42, 30, 66, 2730, 6, 510, 798, 330, 138, 2730};

    static double value(int k) {  // B_{2k}
        return static_cast<double>(num[k - 1]) / static_cast<double>(den[k - 1]);
    }
};

namespace detail {

// B_{2k}/(2k)! for the Euler-Maclaurin correction loop, k = 1..12
inline const std::array<double, 12>& bern_over_fact() {
    static const std::array<double, 12> tbl = [] {
        std::array<double, 12> t{};
        double fact = 1.0;
        for (int k = 1; k <= 12; ++k) {
            fact *= (2.0 * k - 1.0) * (2.0 * k);
            t[k - 1] = BernoulliTable::value(k) / fact;
        }
        return t;
    }();
    return tbl;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Gamma and digamma
// ---------------------------------------------------------------------------

namespace detail {

// Lanczos coefficients, g = 607/128, n = 15 (Godfrey's set); relative error
// below 1e-14 on Re z >= 1/2 for the |Im z| range used here.
inline constexpr double lanczos_g = 4.7421875;
inline constexpr std::array<double, 15> lanczos_c = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

inline cplx lanczos_sum(cplx z) {
    cplx acc = lanczos_c[0];
    for (int k = 1; k < 15; ++k) acc += lanczos_c[k] / (z + cplx(k - 1.0));
    return acc;
}

inline void require_off_poles(cplx s, double tol) {
    if (s.real() > 0.5) return;
    double r = std::round(s.real());
    if (r <= 0.0 && std::abs(s - cplx(r)) <= tol)
        throw pole_error("gamma/digamma pole at non-positive integer");
}

}  // namespace detail

inline cplx gamma(cplx s) {
    detail::require_off_poles(s, 1e-14);
    if (s.real() < 0.5) {
        // reflection
        return checked(pi / (std::sin(pi * s) * gamma(1.0 - s)), "gamma");
    }
    cplx t = s + (detail::lanczos_g - 0.5);
    // exponentials combined so intermediate factors cannot overflow early
    cplx v = std::sqrt(2.0 * pi) * std::exp((s - 0.5) * std::log(t) - t) * detail::lanczos_sum(s);
    return checked(v, "gamma");
}

inline cplx digamma(cplx s) {
    detail::require_off_poles(s, 1e-14);
    // exact half-integer / integer ladder from Psi(1/2), Psi(1)
    if (s.imag() == 0.0) {
        double two_s = 2.0 * s.real();
        if (two_s == std::round(two_s)) {
            bool half_int = std::llround(two_s) % 2 != 0;
            double psi = half_int ? -euler_gamma - 2.0 * std::log(2.0) : -euler_gamma;
            double x = half_int ? 0.5 : 1.0;
            while (x < s.real() - 0.25) { psi += 1.0 / x; x += 1.0; }
            while (x > s.real() + 0.25) { x -= 1.0; psi -= 1.0 / x; }
            return cplx(psi);
        }
    }
    cplx z = s, acc = 0.0;
    if (z.real() < 0.5) {
        // Psi(z) = Psi(1-z) - pi cot(pi z)
        acc -= pi / std::tan(pi * z);
        z = 1.0 - z;
    }
    while (z.real() < 12.0) { acc -= 1.0 / z; z += 1.0; }
    cplx inv2 = 1.0 / (z * z), p = inv2;
    cplx tail = 0.0;
    for (int k = 1; k <= 8; ++k) {
        tail += BernoulliTable::value(k) / (2.0 * k) * p;
        p *= inv2;
    }
    return checked(acc + std::log(z) - 0.5 / z - tail, "digamma");
}

// ---------------------------------------------------------------------------
// Hurwitz / Riemann / periodic zeta
// ---------------------------------------------------------------------------

namespace detail {

// Euler-Maclaurin: head of M terms, integral + half term, corrections to B_24.
// Sound in doubles for Re s >= -2 (cancellation grows like (M+x)^{1+|Re s|}).
inline cplx hurwitz_em(cplx s, double x) {
    int M = 15 + static_cast<int>(std::ceil(std::abs(s.imag())));
    cplx head = 0.0;
    for (int n = 0; n < M; ++n) head += std::pow(cplx(n + x), -s);
    double T = M + x;
    cplx P = std::pow(cplx(T), -s);
    cplx acc = head + T * P / (s - 1.0) + 0.5 * P;
    cplx tk = P / T;              // T^{-s-1}
    cplx poch = s;                // (s)_{2k-1} built incrementally
    const auto& bf = bern_over_fact();
    for (int k = 1; k <= 12; ++k) {
        acc += bf[k - 1] * poch * tk;
        tk /= T * T;
        poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    }
    return acc;
}

// F(s,x) = sum_{n>=1} e(nx) n^{-s} by direct summation; needs Re s > 2.5 or so.
inline cplx periodic_f_series(cplx s, double x) {
    x -= std::floor(x);
    double sr = s.real();
    double nmax = std::pow(10.0, 16.0 / sr);
    std::int64_t N = static_cast<std::int64_t>(std::min(nmax, 2.0e6)) + 2;
    cplx acc = 0.0;
    for (std::int64_t n = N; n >= 1; --n) {
        double ph = 2.0 * pi * std::fmod(n * x, 1.0);
        acc += cplx(std::cos(ph), std::sin(ph)) * std::exp(-s * std::log((double)n));
    }
    return acc;
}

// Hurwitz formula: solves the pair F(1-w, x), F(1-w, 1-x) for zeta(w, x).
// Used for Re w < -2 where Euler-Maclaurin loses to cancellation.
inline cplx hurwitz_reflect(cplx w, double x) {
    cplx s1 = 1.0 - w;
    cplx sinw = std::sin(pi * w);
    if (std::abs(sinw) < 1e-8)
        throw domain_error("hurwitz_zeta: s too close to a negative integer for the reflection path");
    cplx pref = std::pow(cplx(2.0 * pi), w) / gamma(w);
    cplx A = periodic_f_series(s1, x) * pref;
    cplx B = periodic_f_series(s1, 1.0 - x) * pref;
    cplx al = std::exp(iunit * (pi / 2.0) * w);
    return (al * A - B / al) / (2.0 * iunit * sinw);
}

}  // namespace detail

inline cplx riemann_zeta(cplx s) {
    if (std::abs(s - cplx(1.0)) < 1e-12) throw pole_error("zeta pole at s = 1");
    if (s.real() < -2.0) {
        // zeta(s) = 2 (2pi)^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
        return checked(2.0 * std::pow(cplx(2.0 * pi), s - 1.0) * std::sin(pi * s / 2.0) *
                           gamma(1.0 - s) * detail::hurwitz_em(1.0 - s, 1.0),
                       "riemann_zeta");
    }
    return checked(detail::hurwitz_em(s, 1.0), "riemann_zeta");
}

inline cplx hurwitz_zeta(cplx s, double x) {
    if (!(x > 0.0 && x <= 1.0)) throw domain_error("hurwitz_zeta: x must lie in (0, 1]");
    if (std::abs(s - cplx(1.0)) < 1e-12) throw pole_error("hurwitz_zeta pole at s = 1");
    if (x == 1.0) return riemann_zeta(s);
    if (s.real() < -2.0) return checked(detail::hurwitz_reflect(s, x), "hurwitz_zeta");
    return checked(detail::hurwitz_em(s, x), "hurwitz_zeta");
}

inline cplx e_of(double x) {
    double t = x - std::round(x);
    return {std::cos(2.0 * pi * t), std::sin(2.0 * pi * t)};
}

inline cplx e_of(cplx z) {
    return std::exp(2.0 * pi * iunit * z);
}

// F(s, r/q) through the finite Hurwitz combination; pole at s=1 only when q | r.
inline cplx periodic_zeta(cplx s, std::int64_t r, std::int64_t q) {
    if (q <= 0) throw domain_error("periodic_zeta: q must be positive");
    std::int64_t rr = mod_reduce(r, q);
    if (rr == 0) return riemann_zeta(s);
    cplx acc = 0.0;
    for (std::int64_t m = 1; m <= q; ++m)
        acc += e_of(static_cast<double>(mod_reduce(rr * m, q)) / q) * hurwitz_zeta(s, static_cast<double>(m) / q);
    return std::pow(cplx((double)q), -s) * acc;
}

// ---------------------------------------------------------------------------
// directed powers (i/z)^s and (-iz)^s, principal log of z, 0 <= arg z <= pi
// ---------------------------------------------------------------------------

enum class DirectedBase { i_over_z, minus_i_z };

inline cplx directed_log(DirectedBase kind, cplx z) {
    if (z == cplx(0.0)) throw domain_error("directed_power: z = 0");
    double a = std::arg(z);
    if (a < -1e-12 || a > pi + 1e-12)
        throw domain_error("directed_power: arg z outside [0, pi]");
    cplx logz = std::log(z);
    return kind == DirectedBase::i_over_z ? iunit * (pi / 2.0) - logz : logz - iunit * (pi / 2.0);
}

inline cplx directed_power(DirectedBase kind, cplx z, cplx s) {
    return std::exp(s * directed_log(kind, z));
}

// ---------------------------------------------------------------------------
// Q_{2j}, P_j, half-integer binomials, 2F1 at unit argument
// ---------------------------------------------------------------------------

inline cplx q_poly(int j, cplx s) {
    cplx p = 1.0;
    for (int l = 0; l < j; ++l) p *= cplx((0.5 + l) * (0.5 + l)) - s * s;
    return p;
}

// binom(j-1/2, j) = Gamma(j+1/2) / (sqrt(pi) j!)
inline double binom_half_j(int j) {
    double v = 1.0;  // j = 0
    for (int i = 1; i <= j; ++i) v *= (i - 0.5) / i;
    return v;
}

// binom(j-1/2, l-1/2) = Gamma(j+1/2) / ((j-l)! Gamma(l+1/2))
inline double binom_half_ratio(int j, int l) {
    double v = 1.0;
    for (int i = l; i < j; ++i) v *= (i + 0.5);  // Gamma(j+1/2)/Gamma(l+1/2)
    for (int i = 2; i <= j - l; ++i) v /= i;
    return v;
}

namespace detail {
inline cplx zeta_pair(int l) {  // zeta(1/2+l) zeta(1/2-l)
    static value_cache<int, cplx> cache;
    return cache.get_or_compute(l, [l] {
        return riemann_zeta(cplx(0.5 + l)) * riemann_zeta(cplx(0.5 - l));
    });
}
}  // namespace detail

namespace detail {
// P_j together with the summand-magnitude total (the cancellation/noise scale)
inline cplx p_poly_accum(int j, cplx x, double& mag) {
    cplx acc = 0.0, xp = 1.0;
    mag = 0.0;
    for (int l = 0; l <= j; ++l) {
        cplx t = binom_half_ratio(j, l) * zeta_pair(l) * xp;
        acc += t;
        mag += std::abs(t);
        xp *= x;
    }
    return acc;
}
}  // namespace detail

inline cplx p_poly(int j, cplx x) {
    double mag = 0.0;
    return detail::p_poly_accum(j, x, mag);
}

// Gauss' formula: 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b))
inline cplx gauss_2f1_unit(cplx a, cplx b, cplx c) {
    return gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b));
}

}  // namespace twm
