#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "twm/common.hpp"
#include "twm/estermann.hpp"
#include "twm/specfun.hpp"

namespace twm {

// [b0; b1..bk] with convergents; alpha_{-1} = 1, v_{-1} = 0 convention.
struct ContinuedFraction {
    std::vector<std::int64_t> quotients;  // b0 .. b_kappa
    std::vector<std::int64_t> conv_num;   // alpha_0 .. alpha_kappa
    std::vector<std::int64_t> conv_den;   // v_0 .. v_kappa

    int kappa() const { return static_cast<int>(quotients.size()) - 1; }
    std::int64_t num() const { return conv_num.back(); }
    std::int64_t den() const { return conv_den.back(); }

    void rebuild_convergents() {
        conv_num.clear();
        conv_den.clear();
        std::int64_t pn = 1, pd = 0;  // alpha_{-1}, v_{-1}
        std::int64_t n = quotients[0], d = 1;
        conv_num.push_back(n);
        conv_den.push_back(d);
        for (std::size_t i = 1; i < quotients.size(); ++i) {
            std::int64_t nn = quotients[i] * n + pn;
            std::int64_t nd = quotients[i] * d + pd;
            pn = n; pd = d; n = nn; d = nd;
            conv_num.push_back(n);
            conv_den.push_back(d);
        }
    }
};

// canonical Euclid expansion (b_kappa >= 2 automatically when kappa >= 1)
inline ContinuedFraction expand(std::int64_t a, std::int64_t q) {
    if (q <= 0) throw domain_error("expand: q must be positive");
    if (a < 0) throw domain_error("expand: a must be non-negative");
    if (gcd64(a, q) != 1) throw not_coprime_error(a, q);
    ContinuedFraction cf;
    std::int64_t x = a, y = q;
    do {
        cf.quotients.push_back(x / y);
        std::int64_t r = x % y;
        x = y; y = r;
    } while (y != 0);
    cf.rebuild_convergents();
    return cf;
}

// toggle the parity of kappa: [.., b] <-> [.., b-1, 1]; value-preserving
inline ContinuedFraction adjust_parity(const ContinuedFraction& cf, bool want_even) {
    if (cf.kappa() < 1) throw domain_error("adjust_parity: kappa must be >= 1");
    if ((cf.kappa() % 2 == 0) == want_even) return cf;
    ContinuedFraction out = cf;
    std::int64_t last = out.quotients.back();
    if (last >= 2) {
        out.quotients.back() = last - 1;
        out.quotients.push_back(1);
    } else {
        out.quotients.pop_back();
        out.quotients.back() += 1;
    }
    out.rebuild_convergents();
    return out;
}

// checks {(-1)^{kappa+1} abar / q} = [0; b_kappa, ..., b_1] as exact fractions
inline bool reversal_identity_check(std::int64_t a, std::int64_t q) {
    ContinuedFraction cf = expand(mod_reduce(a, q), q);
    int kp = cf.kappa();
    if (kp == 0) return true;
    std::int64_t abar = mod_inverse(a, q);
    std::int64_t m = mod_reduce((kp % 2 == 0 ? -1 : 1) * abar, q);
    ContinuedFraction rev;
    rev.quotients.push_back(0);
    for (int j = kp; j >= 1; --j) rev.quotients.push_back(cf.quotients[j]);
    rev.rebuild_convergents();
    std::int64_t g = gcd64(rev.num(), rev.den());
    return rev.num() / g == m && rev.den() / g == q;
}

namespace detail {

inline double log8pi_gamma_term(double ratio) {
    return std::log(ratio) + euler_gamma - std::log(8.0 * pi);
}

inline double zeta_half_sq() {
    static const double v = [] {
        double z = riemann_zeta(cplx(0.5)).real();
        return z * z;
    }();
    return v;
}

}  // namespace detail

// D_0(1/2, sign a/q) assembled along the Euclid chain of a/q:
//   zeta(1/2)^2 (kappa+1)
//   + 1/2 sum_j (v_j/v_{j-1})^{1/2} (log(v_j/v_{j-1}) + gamma - log 8pi - pi/2)
//   -+ i/2 sum_j (-1)^j (...)^{1/2} (log(...) + gamma - log 8pi + pi/2)
//   + sum_j E_0(0, -+ (-1)^j v_{j-1}/v_j).
// The sign inside E_0 is the opposite of the printed source formula; the
// kappa = 1 case must reduce to the one-step reciprocity identity, which
// fixes it (cross-checked against the double-sum evaluation in the tests).
inline cplx exact_D_formula(std::int64_t a, std::int64_t q, int sign) {
    if (q <= 0) throw domain_error("exact_D_formula: q must be positive");
    if (gcd64(a, q) != 1) throw not_coprime_error(a, q);
    int sg = sign >= 0 ? 1 : -1;
    ContinuedFraction cf = expand(mod_reduce(a, q), q);
    int kp = cf.kappa();
    cplx acc = detail::zeta_half_sq() * (kp + 1.0);
    std::int64_t vprev = 1;  // v_0
    for (int j = 1; j <= kp; ++j) {
        std::int64_t vj = cf.conv_den[j];
        double ratio = static_cast<double>(vj) / vprev;
        double lg = detail::log8pi_gamma_term(ratio);
        double rt = std::sqrt(ratio);
        acc += 0.5 * rt * (lg - pi / 2.0);
        acc += -static_cast<double>(sg) * 0.5 * iunit * ((j % 2 == 0) ? 1.0 : -1.0) * rt * (lg + pi / 2.0);
        int es = sg * ((j % 2 == 0) ? -1 : 1);  // -sign (-1)^j
        acc += residual_EN(0, cplx(0.0), vprev, vj, es);
        vprev = vj;
    }
    return acc;
}

// Moment side of the chain identity: equals M*_0(sign a, q) for prime q.
inline double rhs_Ypo(std::int64_t a, std::int64_t q, int sign) {
    if (!is_prime(q)) throw not_prime_error(q);
    if (gcd64(a, q) != 1) throw not_coprime_error(a, q);
    int sg = sign >= 0 ? 1 : -1;
    ContinuedFraction cf = expand(mod_reduce(a, q), q);
    int kp = cf.kappa();
    double acc = detail::zeta_half_sq() * (kp + 1.0);
    std::int64_t vprev = 1;
    for (int j = 1; j <= kp; ++j) {
        std::int64_t vj = cf.conv_den[j];
        double ratio = static_cast<double>(vj) / vprev;
        int par = (j % 2 == 0) ? 1 : -1;  // (-1)^j
        if (par == -sg) {
            acc += std::sqrt(ratio) * detail::log8pi_gamma_term(ratio);
        } else {
            acc -= pi / 2.0 * std::sqrt(ratio);
        }
        acc += psi_N(0, vprev, vj, -sg * par);
        vprev = vj;
    }
    return acc;
}

// f_pm(a/q) = sum_j (pm 1)^j b_j^{1/2} (log b_j + gamma - log 8pi -+ pi/2)
inline double f_pm(int sign, std::int64_t a, std::int64_t q) {
    if (!(a >= 1 && a <= q)) throw domain_error("f_pm: need 1 <= a <= q");
    int sg = sign >= 0 ? 1 : -1;
    std::int64_t g = gcd64(a, q);
    ContinuedFraction cf = expand(a / g, q / g);
    double acc = 0.0;
    for (int j = 1; j <= cf.kappa(); ++j) {
        double b = static_cast<double>(cf.quotients[j]);
        double sgn = (j % 2 == 0) ? 1.0 : static_cast<double>(sg);
        acc += sgn * std::sqrt(b) * (std::log(b) + euler_gamma - std::log(8.0 * pi) - sg * pi / 2.0);
    }
    return acc;
}

// Expansion of {h kbar / q} split as [0; b_1..b_r, middle, c_s..c_1] where the
// flanks (r, s even) expand {-h qbar / k} and {-k qbar / h}.
struct TwoTwistSplit {
    ContinuedFraction left;    // [0; b_1..b_r], r even
    std::int64_t middle;       // the joining quotient, within 2 of q/(hk)
    ContinuedFraction right;   // [0; c_1..c_s], s even
    bool exact_match;          // full expansion equals the concatenation
    double middle_window;      // |middle - q/(hk)|
};

inline TwoTwistSplit two_twist_cf_structure(std::int64_t h, std::int64_t k, std::int64_t q) {
    if (gcd64(h, k) != 1) throw not_coprime_error(h, k);
    if (gcd64(h, q) != 1) throw not_coprime_error(h, q);
    if (gcd64(k, q) != 1) throw not_coprime_error(k, q);
    if (q < 4 * h * k) throw precondition_error("two_twist_cf_structure: requires q >= 4hk");

    auto frac_expand = [](std::int64_t num, std::int64_t den) {
        return expand(mod_reduce(num, den), den);
    };
    ContinuedFraction whole = frac_expand(h * mod_inverse(k, q), q);
    if (whole.kappa() % 2 == 0) whole = adjust_parity(whole, false);  // r + s + 1 is odd

    auto evenized = [&](std::int64_t num, std::int64_t den) {
        ContinuedFraction f = frac_expand(num, den);
        if (f.kappa() == 0) return f;  // empty flank (denominator 1)
        return adjust_parity(f, true);
    };
    TwoTwistSplit out;
    out.left = evenized(-h * mod_inverse(q, k), k);
    out.right = evenized(-k * mod_inverse(q, h), h);

    int r = out.left.kappa(), s = out.right.kappa();
    out.exact_match = whole.kappa() == r + s + 1;
    if (out.exact_match) {
        for (int j = 1; j <= r && out.exact_match; ++j)
            out.exact_match = whole.quotients[j] == out.left.quotients[j];
        for (int j = 1; j <= s && out.exact_match; ++j)
            out.exact_match = whole.quotients[r + 1 + j] == out.right.quotients[s + 1 - j];
    }
    out.middle = whole.kappa() >= r + 1 ? whole.quotients[r + 1] : 0;
    out.middle_window = std::abs(static_cast<double>(out.middle) -
                                 static_cast<double>(q) / (static_cast<double>(h) * k));
    return out;
}

// Selberg-type main term for M_pm(h, k; q)
inline double moment_via_cf(int sign, std::int64_t h, std::int64_t k, std::int64_t q) {
    if (!is_prime(q)) throw not_prime_error(q);
    if (gcd64(h, k) != 1) throw not_coprime_error(h, k);
    if (gcd64(h, q) != 1) throw not_coprime_error(h, q);
    if (gcd64(k, q) != 1) throw not_coprime_error(k, q);
    if (q < 4 * h * k) throw precondition_error("moment_via_cf: requires q >= 4hk");
    int sg = sign >= 0 ? 1 : -1;
    double ratio = static_cast<double>(q) / (static_cast<double>(h) * k);
    return 0.5 * std::sqrt(ratio) *
           (std::log(ratio) + euler_gamma - std::log(8.0 * pi) - sg * pi / 2.0);
}

}  // namespace twm
