#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace twm {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338328;
// Euler-Mascheroni constant to 20 digits.
inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr cplx iunit{0.0, 1.0};

// ---------------------------------------------------------------------------
// error types
// ---------------------------------------------------------------------------

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// evaluation at (or too near) a pole of the requested function
struct pole_error : domain_error {
    using domain_error::domain_error;
};

struct not_prime_error : domain_error {
    explicit not_prime_error(std::int64_t q)
        : domain_error("modulus is not prime: " + std::to_string(q)) {}
};

struct not_coprime_error : domain_error {
    not_coprime_error(std::int64_t a, std::int64_t b)
        : domain_error("arguments are not coprime: gcd(" + std::to_string(a) + ", " +
                       std::to_string(b) + ") != 1") {}
};

struct precondition_error : domain_error {
    using domain_error::domain_error;
};

struct divergent_series_error : domain_error {
    using domain_error::domain_error;
};

// a computed value violated an internal contract (lost reality, overflow, ...)
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_finite(cplx v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

inline cplx checked(cplx v, const char* what) {
    if (!is_finite(v)) throw consistency_error(std::string(what) + ": non-finite result");
    return v;
}

// ---------------------------------------------------------------------------
// small integer helpers
// ---------------------------------------------------------------------------

inline std::int64_t mod_reduce(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    a = mod_reduce(a, m);
    std::int64_t t = 0, nt = 1, r = m, nr = a;
    while (nr != 0) {
        std::int64_t qq = r / nr;
        t -= qq * nt; std::swap(t, nt);
        r -= qq * nr; std::swap(r, nr);
    }
    if (r != 1) throw not_coprime_error(a, m);
    return mod_reduce(t, m);
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<bool> sieve(std::max<std::int64_t>(n + 1, 2), true);
    sieve[0] = sieve[1] = false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (sieve[p])
            for (std::int64_t m = p * p; m <= n; m += p) sieve[m] = false;
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p <= n; ++p)
        if (sieve[p]) out.push_back(p);
    return out;
}

// ---------------------------------------------------------------------------
// synchronized memo map (shared caches; recompute races are benign)
// ---------------------------------------------------------------------------

template <class Key, class Value>
class value_cache {
  public:
    template <class F>
    Value get_or_compute(const Key& key, F&& compute) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        Value v = compute();
        std::lock_guard<std::mutex> lock(mu_);
        return map_.emplace(key, std::move(v)).first->second;
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        map_.clear();
    }

  private:
    std::mutex mu_;
    std::map<Key, Value> map_;
};

}  // namespace twm
