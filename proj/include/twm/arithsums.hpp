#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>

#include "twm/common.hpp"

namespace twm {

// Exact rational with arbitrary-precision integers; always reduced, den > 0.
using ExactRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline ExactRational make_rational(std::int64_t num, std::int64_t den) {
    return ExactRational(BigInt(num), BigInt(den));
}

// ((x)) = x - floor(x) - 1/2 for non-integer x, 0 for integer x
inline ExactRational sawtooth(const ExactRational& x) {
    BigInt num = numerator(x), den = denominator(x);
    if (den == 1) return ExactRational(0);
    BigInt fl;
    if (num >= 0) {
        fl = num / den;
    } else {
        fl = -((-num + den - 1) / den);
    }
    return x - ExactRational(fl) - ExactRational(1, 2);
}

// s(h/k) = sum_{m=1}^{k-1} ((m h / k)) ((m / k)), exact
inline ExactRational dedekind_sum(std::int64_t h, std::int64_t k) {
    if (k <= 0) throw domain_error("dedekind_sum: k must be positive");
    if (gcd64(h, k) != 1) throw not_coprime_error(h, k);
    // each factor is (2r - k)/(2k) with r the residue; common denominator 4k^2
    BigInt total = 0;
    std::int64_t hr = mod_reduce(h, k);
    for (std::int64_t m = 1; m < k; ++m) {
        std::int64_t r1 = mod_reduce(m * hr, k);
        if (r1 == 0) continue;  // cannot happen for coprime h,k, m<k
        total += BigInt(2 * r1 - k) * BigInt(2 * m - k);
    }
    return ExactRational(total, BigInt(4) * k * k);
}

// same value through the reciprocity recursion, O(log k)
inline ExactRational dedekind_sum_fast(std::int64_t h, std::int64_t k) {
    if (k <= 0) throw domain_error("dedekind_sum: k must be positive");
    if (gcd64(h, k) != 1) throw not_coprime_error(h, k);
    ExactRational acc(0);
    std::int64_t sign = 1;
    h = mod_reduce(h, k);
    // s(h,k) = -1/4 + (h^2 + k^2 + 1)/(12 h k) - s(k mod h, h)
    while (h > 0) {
        acc += sign * (ExactRational(BigInt(h) * h + BigInt(k) * k + 1, BigInt(12) * h * k) -
                       ExactRational(1, 4));
        sign = -sign;
        std::int64_t t = mod_reduce(k, h);
        k = h;
        h = t;
    }
    // loop ends at h = 0, k = 1 with s(0,1) = 0
    return acc;
}

// c_0(h/k) = -sum_{m=1}^{k-1} (m/k) cot(pi m h / k)
inline double cotangent_sum(std::int64_t h, std::int64_t k) {
    if (k < 1) throw domain_error("cotangent_sum: k must be positive");
    if (gcd64(h, k) != 1) throw not_coprime_error(h, k);
    std::int64_t hr = mod_reduce(h, k);
    double acc = 0.0;
    for (std::int64_t m = 1; m < k; ++m) {
        std::int64_t r = mod_reduce(m * hr, k);
        acc += static_cast<double>(m) / k / std::tan(pi * r / k);
    }
    return -acc;
}

// V(a/k) = -c_0(abar / k), from the central-value decomposition of D(0,0;h/k)
inline double vasyunin_sum(std::int64_t h, std::int64_t k) {
    if (k < 1) throw domain_error("vasyunin_sum: k must be positive");
    if (gcd64(h, k) != 1) throw not_coprime_error(h, k);
    if (k == 1) return 0.0;
    return -cotangent_sum(mod_inverse(h, k), k);
}

inline double to_double(const ExactRational& x) {
    return x.convert_to<double>();
}

}  // namespace twm
