#pragma once

#include <cmath>
#include <cstdint>
#include <tuple>
#include <vector>

#include "twm/common.hpp"
#include "twm/specfun.hpp"

namespace twm {

namespace detail {

// D(s, alpha; h/k) as the finite Hurwitz double sum
//   k^{alpha-2s} sum_{m,n=1..k} e(mnh/k) zeta(s-alpha, m/k) zeta(s, n/k),
// valid by continuation wherever s avoids {1, 1+alpha}.
inline cplx estermann_double_sum(cplx s, cplx alpha, std::int64_t h, std::int64_t k) {
    std::vector<cplx> zm(k), zn(k), roots(k);
    for (std::int64_t m = 1; m <= k; ++m) zm[m - 1] = hurwitz_zeta(s - alpha, (double)m / k);
    for (std::int64_t n = 1; n <= k; ++n) zn[n - 1] = hurwitz_zeta(s, (double)n / k);
    for (std::int64_t j = 0; j < k; ++j) roots[j] = e_of((double)j / k);
    cplx acc = 0.0;
    for (std::int64_t m = 1; m <= k; ++m) {
        std::int64_t mr = mod_reduce(m * h, k);
        cplx row = 0.0;
        std::int64_t idx = 0;
        for (std::int64_t n = 1; n <= k; ++n) {
            idx += mr;
            if (idx >= k) idx -= k;
            row += roots[idx] * zn[n - 1];
        }
        acc += zm[m - 1] * row;
    }
    return std::pow(cplx((double)k), alpha - 2.0 * s) * acc;
}

}  // namespace detail

inline cplx estermann_D(cplx s, cplx alpha, std::int64_t h, std::int64_t k) {
    if (k < 1) throw domain_error("estermann_D: k must be positive");
    if (gcd64(h, k) != 1) throw not_coprime_error(h, k);
    if (std::abs(s - cplx(1.0)) < 1e-6) throw pole_error("estermann_D: pole at s = 1");
    if (std::abs(s - 1.0 - alpha) < 1e-6) throw pole_error("estermann_D: pole at s = 1 + alpha");
    std::int64_t hr = mod_reduce(h, k);
    // the central and shifted central values recur constantly in the
    // reciprocity chains; memoize every evaluation (the function is pure)
    static value_cache<std::tuple<double, double, double, double, std::int64_t, std::int64_t>, cplx> cache;
    return cache.get_or_compute({s.real(), s.imag(), alpha.real(), alpha.imag(), hr, k}, [&] {
        return checked(detail::estermann_double_sum(s, alpha, hr, k), "estermann_D");
    });
}

// D_j(s; h/k) = D(s + j, 2s - 1; h/k)
inline cplx estermann_Dj(int j, cplx s, std::int64_t h, std::int64_t k) {
    return estermann_D(s + cplx((double)j), 2.0 * s - 1.0, h, k);
}

// eta(a/q) = (1-i)/2 D(1/2,0;a/q) + (1+i)/2 D(1/2,0;-a/q)
inline cplx eta_value(std::int64_t a, std::int64_t q) {
    cplx d = estermann_D(cplx(0.5), cplx(0.0), a, q);
    // D(1/2, 0; -a/q) is the conjugate for real parameters
    return 0.5 * (1.0 - iunit) * d + 0.5 * (1.0 + iunit) * std::conj(d);
}

// D(0, -1+eps; h/k) + zeta(1-eps)/2, Richardson-extrapolated over eps, eps/2;
// the limit is pi i s(h/k).
inline cplx dedekind_limit_check(std::int64_t h, std::int64_t k, double eps) {
    if (!(eps >= 1e-4 && eps <= 1e-2)) throw domain_error("dedekind_limit_check: eps outside [1e-4, 1e-2]");
    auto f = [&](double e) {
        return estermann_D(cplx(0.0), cplx(-1.0 + e), h, k) + 0.5 * riemann_zeta(cplx(1.0 - e));
    };
    return 2.0 * f(eps / 2.0) - f(eps);
}

// ---------------------------------------------------------------------------
// Eichler-integral series S_j(s, z)
// ---------------------------------------------------------------------------

namespace detail {

// divisor-sum sieve: sigma_{al}(n) for n = 1..N
inline std::vector<cplx> sigma_sieve(std::int64_t N, cplx al) {
    std::vector<cplx> sig(N + 1, 0.0);
    for (std::int64_t d = 1; d <= N; ++d) {
        cplx dp = al == cplx(0.0) ? cplx(1.0) : std::pow(cplx((double)d), al);
        for (std::int64_t m = d; m <= N; m += d) sig[m] += dp;
    }
    return sig;
}

}  // namespace detail

// S_j(s, z) = (2 pi i)^{-j} sum_{n>=1} e(nz) sigma_{2s}(n) n^{-s-1/2-j}
inline cplx series_S(int j, cplx s, cplx z) {
    double imz = z.imag();
    double sr = std::abs(s.real());
    if (imz < 0.0) throw divergent_series_error("series_S: Im z < 0");
    if (imz == 0.0 && !(sr < j - 0.5)) throw divergent_series_error("series_S: divergent at real z");

    // truncate when e^{-2 pi n Im z} n^{|2 Re s|+1} drops below 1e-16
    std::int64_t N = 0;
    const double cap = 2.0e7;
    if (imz > 0.0) {
        double n = 10.0;
        while (n < cap && -2.0 * pi * n * imz + (2.0 * sr + 1.0) * std::log(n) > -37.0) n *= 1.25;
        N = static_cast<std::int64_t>(n) + 10;
    } else {
        double gap = (j - 0.5) - sr;  // terms ~ n^{-1-gap+eps}
        N = static_cast<std::int64_t>(std::pow(10.0, 15.0 / (gap + 1.0))) + 10;
    }
    if (N > static_cast<std::int64_t>(cap))
        throw divergent_series_error("series_S: truncation bound too large");

    auto sig = detail::sigma_sieve(N, 2.0 * s);
    cplx expo = -(s + cplx(0.5 + j));
    double rez = z.real();
    cplx acc = 0.0;
    for (std::int64_t n = N; n >= 1; --n) {
        double ph = 2.0 * pi * std::fmod(n * rez, 1.0);
        double mag = std::exp(-2.0 * pi * n * imz);
        cplx en = mag * cplx(std::cos(ph), std::sin(ph));
        acc += en * sig[n] * std::exp(expo * std::log((double)n));
    }
    // (2 pi i)^{-j}
    cplx rot = std::exp(-cplx((double)j) * (std::log(2.0 * pi) + iunit * (pi / 2.0)));
    return checked(rot * acc, "series_S");
}

// ---------------------------------------------------------------------------
// reciprocity residual E_N and psi_N
// ---------------------------------------------------------------------------

// Gamma(1/2+s-j) zeta(1+2s) X^{-(1/2+s)} + Gamma(1/2-s-j) zeta(1-2s) X^{-(1/2-s)},
// X given through its (branch-resolved) logarithm; at s = 0 the zeta poles
// cancel and the pair collapses to Gamma(1/2-j) X^{-1/2} (Psi(1/2-j) + 2 gamma - log X).
inline cplx gamma_zeta_pair(int j, cplx s, cplx logX) {
    if (std::abs(s) < 1e-12) {
        return gamma(cplx(0.5 - j)) * std::exp(-0.5 * logX) *
               (digamma(cplx(0.5 - j)) + 2.0 * euler_gamma - logX);
    }
    return gamma(0.5 + s - cplx((double)j)) * riemann_zeta(1.0 + 2.0 * s) * std::exp(-(0.5 + s) * logX) +
           gamma(0.5 - s - cplx((double)j)) * riemann_zeta(1.0 - 2.0 * s) * std::exp(-(0.5 - s) * logX);
}

// E_N(s, sign a/q), defined by rearranging the truncated reciprocity identity:
//   E_N = D_0(s+1/2, sign a/q)
//         - sum_{j=0}^{2N} (-1)^j Q_2j(s)/j! [ w^j D_j(s+1/2, -sign q/a)
//                                             + zeta(1/2+j+s) zeta(1/2+j-s) w^j / j! ]
//         - [Gamma-zeta pair],   w = sign a / (2 pi i q)
inline cplx residual_EN(int N, cplx s, std::int64_t a, std::int64_t q, int sign) {
    if (!(std::abs(s.real()) < 0.5)) throw domain_error("residual_EN: |Re s| must be < 1/2");
    if (a <= 0 || q <= 0) throw domain_error("residual_EN: a, q must be positive");
    if (gcd64(a, q) != 1) throw not_coprime_error(a, q);
    int sg = sign >= 0 ? 1 : -1;
    cplx head = estermann_D(s + 0.5, 2.0 * s, sg * a, q);
    cplx w = cplx((double)(sg * a)) / (2.0 * pi * iunit * cplx((double)q));
    cplx acc = 0.0, wj = 1.0;
    double fact = 1.0;
    for (int j = 0; j <= 2 * N; ++j) {
        if (j > 0) { wj *= w; fact *= j; }
        cplx cj = (j % 2 == 0 ? 1.0 : -1.0) * q_poly(j, s) / fact;
        cplx dj = estermann_D(s + 0.5 + cplx((double)j), 2.0 * s, -sg * q, a);
        cplx zz = riemann_zeta(0.5 + j + s) * riemann_zeta(0.5 + j - s);
        acc += cj * (wj * dj + zz * wj / fact);
    }
    cplx logX = cplx(std::log(2.0 * pi * a / (double)q)) - cplx((double)sg) * iunit * (pi / 2.0);
    return head - acc - gamma_zeta_pair(0, s, logX);
}

// psi_N(sign a/q) = (1-i)/2 E_N(0, sign a/q) + (1+i)/2 E_N(0, -sign a/q); real.
inline double psi_N(int N, std::int64_t a, std::int64_t q, int sign) {
    static value_cache<std::tuple<int, std::int64_t, std::int64_t, int>, double> cache;
    int sg = sign >= 0 ? 1 : -1;
    return cache.get_or_compute({N, a, q, sg}, [&] {
        cplx ep = residual_EN(N, cplx(0.0), a, q, sg);
        cplx em = residual_EN(N, cplx(0.0), a, q, -sg);
        cplx v = 0.5 * (1.0 - iunit) * ep + 0.5 * (1.0 + iunit) * em;
        if (std::abs(v.imag()) > 1e-8) throw consistency_error("psi_N: imaginary part too large");
        return v.real();
    });
}

}  // namespace twm
