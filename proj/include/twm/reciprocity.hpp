#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "twm/common.hpp"
#include "twm/contour.hpp"
#include "twm/estermann.hpp"
#include "twm/moments.hpp"
#include "twm/specfun.hpp"

namespace twm {

// E(a,q) from the two-moment reciprocity identity with the explicit main and
// zeta(1/2)^2 terms removed; O(a/q) for a << q.
inline double young_error(std::int64_t a, std::int64_t q) {
    if (!is_prime(a) || !is_prime(q)) throw precondition_error("young_error: a, q must be prime");
    if (!(2 <= a && a < q)) throw precondition_error("young_error: need 2 <= a < q");
    double ma = moment_M(a, q);
    double mb = moment_M(mod_reduce(-q, a), a);
    double ratio = static_cast<double>(q) / a;
    double main = std::sqrt(ratio) * (std::log(ratio) + euler_gamma - std::log(8.0 * pi));
    double zh2 = riemann_zeta(cplx(0.5)).real();
    zh2 *= zh2;
    double sq = std::sqrt(static_cast<double>(q)), sa = std::sqrt(static_cast<double>(a));
    double corr = 1.0 - 2.0 * sq / (q - 1) * (1.0 - 1.0 / sq) + 2.0 * sa / (a - 1) * (1.0 - 1.0 / sa);
    return ma - mb - main - zh2 * corr;
}

struct MtSeries {
    double value;          // truncated sum + closed tail terms
    int terms_used;        // j ran 0 .. terms_used-1
    double last_term;      // |final summand|
    double tail_estimate;  // estimated truncation error (terms decay ~ c/j^2)
};

// Right-hand side of the infinite reciprocity series:
//   sum_j binom(j-1/2, j) [ (-+ a/q)^j M*_j(-+ q, a) + r_{pm,j}(a/q) - P_j(-+ a/q) ]
//   + W_pm(a/q) + g_pm(a/q) - r_{-+,0}(q/a).
// The summands decay only polynomially (~ c j^{-2}, c growing with q/a), and
// past j ~ 60 they are dominated by cancellation noise between factorially
// large zeta(1/2 - l) pieces, so truncation stops at 1e-13, at the noise/growth
// turn, or at j_max, whichever comes first; tail_estimate reports c/J.
inline MtSeries mt_series_rhs(std::int64_t a, std::int64_t q, int sign, int j_max = -1) {
    if (!is_prime(a) || !is_prime(q) || a == q)
        throw precondition_error("mt_series_rhs: a, q must be distinct primes");
    if (a >= q) throw precondition_error("mt_series_rhs: requires a < q (terms decay like a/q)");
    int sg = sign >= 0 ? 1 : -1;
    // 150 keeps zeta(1/2 - j) inside double range; by then the summands are
    // pure cancellation noise anyway
    int cap = std::min(j_max >= 0 ? j_max : 200, 150);
    double x = static_cast<double>(a) / q;

    cplx acc = 0.0;
    double prev = 0.0, last = 0.0;
    int used = 0;
    for (int j = 0; j <= cap; ++j) {
        cplx xj = std::pow(cplx(-sg * x), j);
        cplx mstar = moment_Mstar(cplx(0.5), cplx((double)j), mod_reduce(-sg * q, a), a);
        double pmag = 0.0;
        cplx pj = detail::p_poly_accum(j, cplx(-sg * x), pmag);
        double rj = r_term(sg, j, x);
        cplx term = binom_half_j(j) * (xj * mstar + rj - pj);
        acc += term;
        last = std::abs(term);
        used = j + 1;
        double noise = 1e-15 * binom_half_j(j) * (pmag + std::abs(xj * mstar) + std::abs(rj));
        // the minus-branch summands first rise with the digamma factor, so the
        // growth stop only arms once the polynomial-decay regime is reached
        if (j >= 2 && (last < 1e-13 || last < 50.0 * noise)) break;
        if (j >= 10 && last > 1.5 * prev) break;
        prev = last;
    }
    acc += w_integral(sg, x) + g_pm(sg, x) - r_term(-sg, 0, 1.0 / x);

    MtSeries out;
    out.value = detail::real_checked(acc, 1e-6, "mt_series_rhs");
    out.terms_used = used;
    out.last_term = last;
    out.tail_estimate = last * used;  // sum_{j>J} c/j^2 ~ c/J = t_J J
    return out;
}

struct MtcParts {
    double main;
    double psi;
};

// Finite reciprocity: main = sum_{j=0}^{2N} binom(j-1/2,j) [ (-+a/q)^j M*_j(-+q,a)
// + zeta(1/2+j) zeta(1/2-j) (-+a/q)^j / j! ] - r_{-+}(q/a);  psi = M*_0(pm a,q) - main.
inline MtcParts mtc_truncated(std::int64_t a, std::int64_t q, int sign, int N) {
    if (!is_prime(a) || !is_prime(q) || a == q)
        throw precondition_error("mtc_truncated: a, q must be distinct primes");
    int sg = sign >= 0 ? 1 : -1;
    cplx acc = 0.0;
    double fact = 1.0;
    for (int j = 0; j <= 2 * N; ++j) {
        if (j > 0) fact *= j;
        cplx xj = std::pow(cplx(-sg * static_cast<double>(a) / q), j);
        cplx mstar = moment_Mstar(cplx(0.5), cplx((double)j), mod_reduce(-sg * q, a), a);
        acc += binom_half_j(j) * (xj * mstar + detail::zeta_pair(j) * xj / fact);
    }
    double main = detail::real_checked(acc, 1e-8, "mtc_truncated") -
                  r_term(-sg, 0, static_cast<double>(q) / a);
    cplx m0 = moment_Mstar(cplx(0.5), cplx(0.0), mod_reduce(sg * a, q), q);
    return {main, detail::real_checked(m0, 1e-8, "mtc_truncated") - main};
}

// Re-truncation of the finite identity at j = N; psi~_N(x) << x^{N+1}.
inline double psi_tilde(std::int64_t a, std::int64_t q, int sign, int N) {
    if (!is_prime(a) || !is_prime(q) || a == q)
        throw precondition_error("psi_tilde: a, q must be distinct primes");
    int sg = sign >= 0 ? 1 : -1;
    cplx acc = 0.0;
    double fact = 1.0;
    for (int j = 0; j <= N; ++j) {
        if (j > 0) fact *= j;
        cplx xj = std::pow(cplx(-sg * static_cast<double>(a) / q), j);
        cplx mstar = moment_Mstar(cplx(0.5), cplx((double)j), mod_reduce(-sg * q, a), a);
        acc += binom_half_j(j) * (xj * mstar + detail::zeta_pair(j) * xj / fact);
    }
    double main = detail::real_checked(acc, 1e-8, "psi_tilde") -
                  r_term(-sg, 0, static_cast<double>(q) / a);
    cplx m0 = moment_Mstar(cplx(0.5), cplx(0.0), mod_reduce(sg * a, q), q);
    return detail::real_checked(m0, 1e-8, "psi_tilde") - main;
}

}  // namespace twm
