#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "twm/common.hpp"
#include "twm/specfun.hpp"

namespace twm {

enum class Parity { even, odd };

// All Dirichlet characters mod a prime q, realized through a primitive root:
// chi_t(n) = e(t dlog(n) / (q-1)), t = 0 .. q-2; chi_0 principal; every
// non-principal character mod a prime is primitive.
class CharacterTable {
  public:
    explicit CharacterTable(std::int64_t q) : q_(q) {
        if (!is_prime(q) || q > 100000) throw not_prime_error(q);
        generator_ = smallest_primitive_root(q);
        dlog_.assign(q, -1);
        std::int64_t v = 1;
        for (std::int64_t k = 0; k < q - 1; ++k) {
            dlog_[v] = static_cast<std::int32_t>(k);
            v = (v * generator_) % q;
        }
        roots_.resize(q - 1);
        for (std::int64_t k = 0; k < q - 1; ++k)
            roots_[k] = e_of(static_cast<double>(k) / static_cast<double>(q - 1));
    }

    std::int64_t modulus() const { return q_; }
    std::int64_t generator() const { return generator_; }
    std::int64_t order() const { return q_ - 1; }  // phi(q)
    std::int32_t dlog(std::int64_t n) const { return dlog_[mod_reduce(n, q_)]; }

    cplx chi(std::int64_t t, std::int64_t n) const {
        std::int64_t r = mod_reduce(n, q_);
        if (r == 0) return 0.0;
        return roots_[mod_reduce(t * dlog_[r], q_ - 1)];
    }

    // chi_t(-1) = (-1)^t since dlog(-1) = (q-1)/2
    Parity parity(std::int64_t t) const {
        return mod_reduce(t, 2) == 0 ? Parity::even : Parity::odd;
    }

    bool primitive(std::int64_t t) const { return mod_reduce(t, q_ - 1) != 0; }

  private:
    static std::int64_t smallest_primitive_root(std::int64_t q) {
        if (q == 2) return 1;
        std::vector<std::int64_t> fac;
        std::int64_t m = q - 1;
        for (std::int64_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                fac.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) fac.push_back(m);
        for (std::int64_t g = 2; g < q; ++g) {
            bool ok = true;
            for (std::int64_t p : fac)
                if (pow_mod(g, (q - 1) / p, q) == 1) { ok = false; break; }
            if (ok) return g;
        }
        throw consistency_error("no primitive root found");
    }

    static std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
        std::int64_t r = 1;
        b %= m;
        while (e > 0) {
            if (e & 1) r = r * b % m;
            b = b * b % m;
            e >>= 1;
        }
        return r;
    }

    std::int64_t q_;
    std::int64_t generator_;
    std::vector<std::int32_t> dlog_;
    std::vector<cplx> roots_;
};

inline CharacterTable build_table(std::int64_t q) { return CharacterTable(q); }

inline cplx chi_value(const CharacterTable& table, std::int64_t t, std::int64_t n) {
    return table.chi(t, n);
}

inline Parity parity(const CharacterTable& table, std::int64_t t) { return table.parity(t); }

// shared immutable table per modulus
inline const CharacterTable& character_table(std::int64_t q) {
    static value_cache<std::int64_t, std::shared_ptr<const CharacterTable>> cache;
    return *cache.get_or_compute(q, [q] { return std::make_shared<const CharacterTable>(q); });
}

}  // namespace twm
