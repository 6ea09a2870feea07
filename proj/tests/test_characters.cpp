#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "twm/characters.hpp"

using namespace twm;
using Catch::Approx;

TEST_CASE("build_table basics") {
    REQUIRE_THROWS_AS(build_table(9), not_prime_error);
    REQUIRE_THROWS_AS(build_table(1), not_prime_error);

    CharacterTable t3 = build_table(3);
    REQUIRE(t3.order() == 2);
    REQUIRE(std::abs(t3.chi(1, 2) - cplx(-1.0)) < 1e-15);

    CharacterTable t5 = build_table(5);
    REQUIRE(t5.generator() == 2);
    REQUIRE(std::abs(t5.chi(1, 2) - iunit) < 1e-15);

    // q = 7: 6 characters, 5 primitive; 2 even + 3 odd among the primitive ones
    CharacterTable t7 = build_table(7);
    REQUIRE(t7.order() == 6);
    int even = 0, odd = 0;
    for (std::int64_t t = 0; t < t7.order(); ++t) {
        if (!t7.primitive(t)) continue;
        (t7.parity(t) == Parity::even ? even : odd) += 1;
    }
    REQUIRE(even + odd == 5);
    REQUIRE(even == 2);
    REQUIRE(odd == 3);
}

TEST_CASE("chi_value basics") {
    const CharacterTable& t = character_table(11);
    for (std::int64_t tt = 0; tt < t.order(); ++tt) {
        REQUIRE(std::abs(chi_value(t, tt, 1) - cplx(1.0)) < 1e-15);
        REQUIRE(chi_value(t, tt, 11) == cplx(0.0));
        REQUIRE(chi_value(t, tt, -11) == cplx(0.0));
    }
    for (std::int64_t n : {1, 2, 3, 10, 23, -4}) {
        if (mod_reduce(n, 11) == 0) continue;
        REQUIRE(std::abs(chi_value(t, 0, n) - cplx(1.0)) < 1e-15);  // principal
    }
}

TEST_CASE("parity matches chi(-1)") {
    for (std::int64_t q : {5, 7, 13}) {
        const CharacterTable& t = character_table(q);
        for (std::int64_t tt = 0; tt < t.order(); ++tt) {
            cplx cm1 = t.chi(tt, -1);
            double want = t.parity(tt) == Parity::even ? 1.0 : -1.0;
            REQUIRE(std::abs(cm1 - cplx(want)) < 1e-14);
        }
    }
    REQUIRE(character_table(5).parity(2) == Parity::even);
    REQUIRE(character_table(5).parity(1) == Parity::odd);
    REQUIRE(character_table(7).parity(0) == Parity::even);
}

TEST_CASE("orthogonality over all moduli up to 101") {
    for (std::int64_t q : primes_up_to(101)) {
        const CharacterTable& t = character_table(q);
        for (std::int64_t a = 1; a < q; ++a) {
            for (std::int64_t b = 1; b < q; ++b) {
                cplx acc = 0.0;
                for (std::int64_t tt = 0; tt < q - 1; ++tt)
                    acc += t.chi(tt, a) * std::conj(t.chi(tt, b));
                acc /= static_cast<double>(q - 1);
                double want = (a == b) ? 1.0 : 0.0;
                REQUIRE(std::abs(acc - cplx(want)) < 1e-12);
            }
        }
    }
}

TEST_CASE("multiplicativity") {
    for (std::int64_t q : {7, 31, 97}) {
        const CharacterTable& t = character_table(q);
        for (std::int64_t tt : {std::int64_t(1), std::int64_t(2), (q - 1) / 2, q - 2}) {
            for (std::int64_t m = 1; m < q; m += 3) {
                for (std::int64_t n = 1; n < q; n += 5) {
                    cplx lhs = t.chi(tt, m * n);
                    cplx rhs = t.chi(tt, m) * t.chi(tt, n);
                    REQUIRE(std::abs(lhs - rhs) < 1e-14);
                }
            }
        }
    }
}

TEST_CASE("dlog is a bijection") {
    for (std::int64_t q : {2, 3, 101, 997}) {
        const CharacterTable& t = character_table(q);
        std::vector<bool> seen(q - 1, false);
        for (std::int64_t n = 1; n < q; ++n) {
            auto d = t.dlog(n);
            REQUIRE(d >= 0);
            REQUIRE(d < q - 1);
            REQUIRE(!seen[d]);
            seen[d] = true;
        }
    }
}
