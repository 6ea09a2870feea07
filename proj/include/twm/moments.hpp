#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <tuple>
#include <vector>

#include "twm/characters.hpp"
#include "twm/common.hpp"
#include "twm/specfun.hpp"

namespace twm {

namespace detail {

// L(s, chi_t) for every t at once: one Hurwitz vector, then O(q^2) character
// sums. Cached per (q, s) because parameter sweeps revisit the same modulus.
inline std::shared_ptr<const std::vector<cplx>> l_value_vector(const CharacterTable& tab, cplx s) {
    static value_cache<std::tuple<std::int64_t, double, double>, std::shared_ptr<const std::vector<cplx>>>
        cache;
    const std::int64_t q = tab.modulus();
    return cache.get_or_compute({q, s.real(), s.imag()}, [&tab, s, q] {
        const std::int64_t n = q - 1;
        std::vector<cplx> h(n);
        const bool at_one = std::abs(s - cplx(1.0)) < 1e-12;
        for (std::int64_t r = 1; r < q; ++r)
            h[r - 1] = at_one ? -digamma(cplx(static_cast<double>(r) / q)) / cplx((double)q)
                              : hurwitz_zeta(s, static_cast<double>(r) / q);
        cplx qs = at_one ? cplx(1.0) : std::pow(cplx((double)q), -s);
        auto out = std::make_shared<std::vector<cplx>>(n);
        for (std::int64_t t = 0; t < n; ++t) {
            cplx acc = 0.0;
            for (std::int64_t r = 1; r < q; ++r) acc += tab.chi(t, r) * h[r - 1];
            (*out)[t] = qs * acc;
        }
        return out;
    });
}

inline double real_checked(cplx v, double imag_tol, const char* what) {
    if (std::abs(v.imag()) > imag_tol)
        throw consistency_error(std::string(what) + ": imaginary part exceeds tolerance");
    return v.real();
}

}  // namespace detail

// L(s, chi_t) by the finite Hurwitz decomposition; s = 1 handled through the
// digamma formula for non-principal characters.
inline cplx dirichlet_l(const CharacterTable& table, std::int64_t t, cplx s) {
    t = mod_reduce(t, table.order());
    if (std::abs(s - cplx(1.0)) < 1e-12 && t == 0) throw pole_error("L(s, chi_0) pole at s = 1");
    return (*detail::l_value_vector(table, s))[t];
}

// M(a,q) = (sqrt q / phi q) sum over primitive chi of |L(1/2,chi)|^2 chi(a)
inline double moment_M(std::int64_t a, std::int64_t q) {
    if (q == 2) {
        if (gcd64(a, q) != 1) throw not_coprime_error(a, q);
        return 0.0;  // no primitive characters mod 2
    }
    const CharacterTable& tab = character_table(q);
    if (gcd64(a, q) != 1) throw not_coprime_error(a, q);
    const auto& L = *detail::l_value_vector(tab, cplx(0.5));
    cplx acc = 0.0;
    for (std::int64_t t = 1; t < q - 1; ++t) acc += std::norm(L[t]) * tab.chi(t, a);
    return detail::real_checked(std::sqrt((double)q) / (q - 1) * acc, 1e-9, "moment_M");
}

// M*(s, z; a, q), primitive-character-sum form; modulus 1 degenerates to
// zeta(s+z) zeta(s-z).
inline cplx moment_Mstar(cplx s, cplx z, std::int64_t a, std::int64_t q) {
    if (std::abs(s + z - cplx(1.0)) < 1e-6 || std::abs(s - z - cplx(1.0)) < 1e-6)
        throw pole_error("moment_Mstar: s +- z too close to 1");
    if (q == 1) return riemann_zeta(s + z) * riemann_zeta(s - z);
    const CharacterTable& tab = character_table(q);
    if (gcd64(a, q) != 1) throw not_coprime_error(a, q);
    const double phi = static_cast<double>(q - 1);
    const auto& Lm = *detail::l_value_vector(tab, s - z);
    const auto& Lp = *detail::l_value_vector(tab, s + z);
    cplx acc = 0.0;
    for (std::int64_t t = 1; t < q - 1; ++t) {
        // conj(chi_t) = chi_{q-1-t}
        acc += Lm[q - 1 - t] * Lp[t] * tab.chi(t, a);
    }
    cplx qd = cplx((double)q);
    cplx corr = std::pow(qd, -z) / phi *
                (std::pow(qd, 1.0 - s) + std::pow(qd, s) - std::pow(qd, z) - std::pow(qd, -z)) *
                riemann_zeta(s + z) * riemann_zeta(s - z);
    return std::pow(qd, s - z) / phi * acc + corr;
}

inline cplx moment_Mstar_j(int j, std::int64_t a, std::int64_t q) {
    return moment_Mstar(cplx(0.5), cplx((double)j), a, q);
}

// A(s,z;a,q) = (1/q) sum_l F(s-z, l/q) F(s+z, a l/q)
inline cplx bilinear_A(cplx s, cplx z, std::int64_t a, std::int64_t q) {
    if (q <= 0) throw domain_error("bilinear_A: q must be positive");
    if (gcd64(a, q) != 1) throw not_coprime_error(a, q);
    if (std::abs(s - z - cplx(1.0)) < 1e-6 || std::abs(s + z - cplx(1.0)) < 1e-6)
        throw pole_error("bilinear_A: F-pole collision at s -+ z = 1");
    cplx acc = 0.0;
    std::int64_t ar = mod_reduce(a, q);
    for (std::int64_t l = 1; l <= q; ++l)
        acc += periodic_zeta(s - z, l, q) * periodic_zeta(s + z, ar * l, q);
    return acc / cplx((double)q);
}

// M_pm(h, k; q): second moment with two twists, restricted by parity
inline double moment_two_twists(Parity par, std::int64_t h, std::int64_t k, std::int64_t q) {
    if (gcd64(h, k) != 1) throw not_coprime_error(h, k);
    if (gcd64(h, q) != 1) throw not_coprime_error(h, q);
    if (gcd64(k, q) != 1) throw not_coprime_error(k, q);
    if (q == 2) return 0.0;
    const CharacterTable& tab = character_table(q);
    const auto& L = *detail::l_value_vector(tab, cplx(0.5));
    cplx acc = 0.0;
    for (std::int64_t t = 1; t < q - 1; ++t) {
        if (tab.parity(t) != par) continue;
        acc += std::norm(L[t]) * tab.chi(t, h) * std::conj(tab.chi(t, k));
    }
    return detail::real_checked(std::sqrt((double)q) / (q - 1) * acc, 1e-9, "moment_two_twists");
}

// (even, odd) parts: 1/2 (M*_0(a,q) +- M*_0(-a,q))
inline std::pair<double, double> parity_split_Mstar(std::int64_t a, std::int64_t q) {
    cplx p = moment_Mstar(cplx(0.5), cplx(0.0), a, q);
    cplx m = moment_Mstar(cplx(0.5), cplx(0.0), mod_reduce(-a, q), q);
    return {detail::real_checked(0.5 * (p + m), 1e-9, "parity_split_Mstar"),
            detail::real_checked(0.5 * (p - m), 1e-9, "parity_split_Mstar")};
}

// (1/q) sum_a |M(a,q)|, the first-moment size probe
inline double first_moment_bound_check(std::int64_t q) {
    if (q > 500) throw domain_error("first_moment_bound_check: q must be <= 500");
    double acc = 0.0;
    for (std::int64_t a = 1; a < q; ++a) acc += std::abs(moment_M(a, q));
    return acc / static_cast<double>(q);
}

}  // namespace twm
