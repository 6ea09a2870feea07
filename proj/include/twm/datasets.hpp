#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "twm/common.hpp"
#include "twm/moments.hpp"
#include "twm/parallel.hpp"
#include "twm/reciprocity.hpp"

namespace twm {

struct Fig1Row {
    std::int64_t a, q;
    double x;
    double m;
};

struct Fig2Row {
    std::int64_t a, q;
    double x;
    int n;
    double psi;
};

// optional extra sampling of larger primes with a/q near a target rational
struct NearSampler {
    std::int64_t p = 1, r = 2;
    double window = 1e-3;
    std::int64_t qcap = 1000;
};

inline std::vector<std::pair<std::int64_t, std::int64_t>> prime_pairs(std::int64_t qmax) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    auto primes = primes_up_to(qmax);
    for (std::int64_t q : primes)
        for (std::int64_t a : primes) {
            if (a >= q) break;
            pairs.emplace_back(a, q);
        }
    // deterministic order: q ascending, then a ascending
    std::sort(pairs.begin(), pairs.end(),
              [](auto& l, auto& r) { return l.second != r.second ? l.second < r.second : l.first < r.first; });
    return pairs;
}

inline std::vector<Fig1Row> figure1_rows(std::int64_t qmax, int threads = 1) {
    auto pairs = prime_pairs(qmax);
    std::vector<Fig1Row> rows(pairs.size());
    parallel_for(static_cast<std::int64_t>(pairs.size()), threads, [&](std::int64_t i) {
        auto [a, q] = pairs[i];
        rows[i] = {a, q, static_cast<double>(a) / q, moment_M(a, q)};
    });
    return rows;
}

inline std::vector<Fig2Row> figure2_rows(std::int64_t qmax, const std::vector<int>& orders,
                                         const std::optional<NearSampler>& near = std::nullopt,
                                         int threads = 1) {
    auto pairs = prime_pairs(qmax);
    if (near) {
        auto primes = primes_up_to(std::max(near->qcap, qmax));
        double target = static_cast<double>(near->p) / near->r;
        for (std::int64_t q : primes) {
            if (q <= qmax) continue;
            for (std::int64_t a : primes) {
                if (a >= q) break;
                if (std::abs(static_cast<double>(a) / q - target) <= near->window)
                    pairs.emplace_back(a, q);
            }
        }
        std::sort(pairs.begin(), pairs.end(), [](auto& l, auto& r) {
            return l.second != r.second ? l.second < r.second : l.first < r.first;
        });
    }
    std::vector<Fig2Row> rows(pairs.size() * orders.size());
    // datasets stacked by N; inside each, q ascending then a ascending
    parallel_for(static_cast<std::int64_t>(rows.size()), threads, [&](std::int64_t i) {
        std::size_t block = static_cast<std::size_t>(i) / pairs.size();
        auto [a, q] = pairs[i % pairs.size()];
        int n = orders[block];
        rows[i] = {a, q, static_cast<double>(a) / q, n, psi_tilde(a, q, +1, n)};
    });
    return rows;
}

namespace detail {

inline std::string fmt_double(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

}  // namespace detail

// CSV: UTF-8, header row, comma separators, LF endings; x carries 20
// significant digits, values 17 (round-trip exact).
inline void write_figure1_csv(std::ostream& os, const std::vector<Fig1Row>& rows) {
    os << "a,q,x,M\n";
    for (const auto& r : rows)
        os << r.a << ',' << r.q << ',' << detail::fmt_double(r.x, 20) << ','
           << detail::fmt_double(r.m, 17) << '\n';
}

inline void write_figure2_csv(std::ostream& os, const std::vector<Fig2Row>& rows) {
    os << "a,q,x,N,psi_tilde\n";
    for (const auto& r : rows)
        os << r.a << ',' << r.q << ',' << detail::fmt_double(r.x, 20) << ',' << r.n << ','
           << detail::fmt_double(r.psi, 17) << '\n';
}

}  // namespace twm
