#pragma once

// Named verification suites: each numbered check evaluates one acceptance
// criterion at its pinned tolerance and reports the worst residual seen.

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "twm/arithsums.hpp"
#include "twm/cfrac.hpp"
#include "twm/contour.hpp"
#include "twm/datasets.hpp"
#include "twm/estermann.hpp"
#include "twm/moments.hpp"
#include "twm/parallel.hpp"
#include "twm/reciprocity.hpp"

namespace twm {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

struct SuiteOptions {
    bool quick = false;
    double tol_scale = 1.0;
    int threads = 2;
    std::uint64_t seed = 20240917;
};

namespace suites {

// brute-force L(s, chi): plain 4e6-term Hurwitz heads with integral tails,
// independent of the production Euler-Maclaurin/reflection machinery
inline cplx l_brute(const std::vector<cplx>& chi, cplx s, std::int64_t N) {
    std::int64_t q = static_cast<std::int64_t>(chi.size());
    cplx acc = 0.0;
    for (std::int64_t r = 1; r < q; ++r) {
        if (chi[r] == cplx(0.0)) continue;
        cplx h = 0.0;
        double x = static_cast<double>(r) / q;
        if (s.imag() == 0.0) {
            double racc = 0.0, sr = s.real();
            for (std::int64_t n = N - 1; n >= 0; --n) racc += std::pow(n + x, -sr);
            h = racc;
        } else {
            for (std::int64_t n = N - 1; n >= 0; --n) h += std::pow(cplx(n + x), -s);
        }
        double T = N + x;
        h += std::pow(cplx(T), 1.0 - s) / (s - 1.0) - 0.5 * std::pow(cplx(T), -s);
        acc += chi[r] * h;
    }
    return std::pow(cplx((double)q), -s) * acc;
}

inline CheckResult make_result(std::string name, double residual, double tol,
                               const SuiteOptions& opt, std::string note = "") {
    CheckResult r;
    r.name = std::move(name);
    r.residual = residual;
    r.tolerance = tol * opt.tol_scale;
    r.pass = residual <= r.tolerance;
    r.note = std::move(note);
    return r;
}

// ---- 1 & 2: central bridges to Dedekind and cotangent sums ----------------

inline CheckResult dedekind_bridge(const SuiteOptions& opt) {
    std::int64_t qmax = opt.quick ? 31 : 101;
    double worst = 0.0;
    for (std::int64_t q : primes_up_to(qmax)) {
        const CharacterTable& tab = character_table(q);
        for (std::int64_t a = 1; a < q; ++a) {
            cplx acc = 0.0;
            for (std::int64_t t = 1; t < q - 1; ++t)
                acc += std::norm(dirichlet_l(tab, t, cplx(0.0))) * tab.chi(t, a);
            double lhs = acc.real() / (q - 1);
            worst = std::max(worst, std::abs(lhs - to_double(dedekind_sum(a, q))));
        }
    }
    return make_result("dedekind bridge: |L(0)|^2 character sums vs exact s(a/q)", worst, 1e-7, opt);
}

inline CheckResult cotangent_bridge(const SuiteOptions& opt) {
    std::int64_t qmax = opt.quick ? 31 : 101;
    double worst = 0.0;
    for (std::int64_t q : primes_up_to(qmax)) {
        const CharacterTable& tab = character_table(q);
        for (std::int64_t a = 1; a < q; ++a) {
            cplx acc = 0.0;
            for (std::int64_t t = 1; t < q - 1; ++t) {
                if (tab.parity(t) != Parity::odd) continue;
                acc += dirichlet_l(tab, -t, cplx(1.0)) * dirichlet_l(tab, t, cplx(0.0)) * tab.chi(t, a);
            }
            cplx lhs = static_cast<double>(q) / (q - 1) * acc;
            worst = std::max(worst, std::abs(lhs - cplx(pi / 2.0 * cotangent_sum(a, q))));
        }
    }
    return make_result("cotangent bridge: odd L(1)L(0) sums vs (pi/2) c0(a/q)", worst, 1e-7, opt);
}

// ---- 3 & 4: the moment-Estermann dictionary --------------------------------

inline const std::vector<std::pair<cplx, cplx>>& sz_grid() {
    static const std::vector<std::pair<cplx, cplx>> grid = {
        {cplx(0.5), cplx(0.1)},        {cplx(0.5), cplx(0.0, 0.25)},
        {cplx(0.4), cplx(0.1)},        {cplx(0.6, 0.2), cplx(0.15)},
        {cplx(0.3), cplx(0.0, 0.2)},   {cplx(0.7), cplx(-0.2)},
        {cplx(1.2), cplx(0.3)},        {cplx(0.5, 0.5), cplx(0.2)},
        {cplx(0.9), cplx(0.35)},       {cplx(0.25), cplx(0.1, 0.1)},
        {cplx(1.1, 0.3), cplx(-0.15)}, {cplx(0.8), cplx(0.0, 0.45)}};
    return grid;
}

inline CheckResult tff_identity(const SuiteOptions& opt) {
    double worst = 0.0;
    std::vector<std::int64_t> qs = opt.quick ? std::vector<std::int64_t>{5, 7}
                                             : std::vector<std::int64_t>{5, 7, 11, 13};
    for (auto [s, z] : sz_grid()) {
        for (std::int64_t q : qs) {
            for (std::int64_t a : {1, 2}) {
                cplx mp = moment_Mstar(s, z, a, q);
                cplx mm = moment_Mstar(s, z, mod_reduce(-a, q), q);
                cplx dp = estermann_D(s + z, 2.0 * s - 1.0, a, q);
                cplx dm = estermann_D(s + z, 2.0 * s - 1.0, -a, q);
                cplx pre1 = gamma(1.0 - s + z) / std::pow(cplx(2.0 * pi), 1.0 + z - s);
                cplx ph1 = std::exp(-iunit * pi * (1.0 - s + z) / 2.0);
                worst = std::max(worst, std::abs(mp - pre1 * (ph1 * dp + dm / ph1)));
                cplx pre2 = std::pow(cplx(2.0 * pi), z - s) * gamma(s - z);
                cplx ph2 = std::exp(iunit * pi * (s - z) / 2.0);
                worst = std::max(worst, std::abs(dp - pre2 * (ph2 * mp + mm / ph2)));
            }
        }
    }
    return make_result("moment-Estermann identity, both directions", worst, 1e-8, opt);
}

inline CheckResult ffs_ftrr_identity(const SuiteOptions& opt) {
    double worst = 0.0;
    std::vector<std::int64_t> qs = opt.quick ? std::vector<std::int64_t>{5, 7}
                                             : std::vector<std::int64_t>{5, 7, 11, 13};
    for (auto [s, z] : sz_grid()) {
        for (std::int64_t q : qs) {
            for (std::int64_t a : {1, 2}) {
                cplx A = bilinear_A(s, z, a, q);
                // M*(s,z;a,q) = q^{s-z} A(s,z;-a,q)
                cplx mp = moment_Mstar(s, z, mod_reduce(-a, q), q);
                worst = std::max(worst, std::abs(mp - std::pow(cplx((double)q), s - z) * A));
                // A in terms of D
                cplx pre = std::pow(cplx((double)q), -s + z) * gamma(1.0 - s + z) *
                           std::pow(cplx(2.0 * pi), s - 1.0 - z);
                cplx ph = std::exp(iunit * pi * (1.0 - s + z) / 2.0);
                cplx rhs = pre * (ph * estermann_D(s + z, 2.0 * s - 1.0, a, q) +
                                  estermann_D(s + z, 2.0 * s - 1.0, -a, q) / ph);
                worst = std::max(worst, std::abs(A - rhs));
            }
        }
    }
    return make_result("bilinear-sum identities (series and Estermann sides)", worst, 1e-8, opt);
}

// ---- 5: the truncated transformation at an interior point ------------------

inline CheckResult rtfs_upper_half_plane(const SuiteOptions& opt) {
    // S_0 by direct series against its Mellin-Barnes representation, wired
    // through the N = 1 truncated identity (the residual is the rearrangement
    // remainder, so the gap equals the two-path disagreement on S_0)
    cplx z(0.3, 0.5);
    double worst = 0.0;
    for (cplx s : {cplx(0.0), cplx(0.1)}) {
        cplx series = series_S(0, s, z);
        cplx tot = 0.0;
        double fact = 1.0;
        cplx w = z / (2.0 * pi * iunit), wj = 1.0, zj = 1.0;
        for (int j = 0; j <= 2; ++j) {
            if (j > 0) { fact *= j; wj *= w; zj *= z; }
            cplx cj = (j % 2 == 0 ? 1.0 : -1.0) * q_poly(j, s) / fact;
            cplx zz = riemann_zeta(0.5 + j + s) * riemann_zeta(0.5 + j - s);
            tot += cj * (zj * series_S(j, s, -1.0 / z) + zz * wj / fact);
        }
        cplx logX = std::log(2.0 * pi) + std::log(z) - iunit * (pi / 2.0);
        cplx resid = series - tot - gamma_zeta_pair(0, s, logX);
        // Mellin-Barnes path for the head
        cplx mb = line_integral(LineIntegralSpec::default_z(), [&](cplx ww) {
            return gamma(ww) * riemann_zeta(0.5 + ww + s) * riemann_zeta(0.5 + ww - s) *
                   std::exp(-ww * logX);
        });
        worst = std::max(worst, std::abs(mb - (tot + gamma_zeta_pair(0, s, logX) + resid)));
    }
    return make_result("truncated reciprocity at z = 0.3+0.5i (two-path head)", worst, 1e-8, opt);
}

// ---- 6: the infinite reciprocity series ------------------------------------

inline std::vector<std::pair<std::int64_t, std::int64_t>> mt_pairs() {
    return {{2, 7},  {2, 11}, {2, 13}, {3, 11}, {3, 13}, {2, 17}, {3, 17},
            {5, 17}, {2, 19}, {3, 19}, {2, 23}, {5, 23}, {7, 23}, {2, 29},
            {3, 29}, {5, 29}, {7, 29}, {2, 31}, {3, 31}, {5, 31}};
}

inline CheckResult mt_series(const SuiteOptions& opt) {
    auto pairs = mt_pairs();
    if (opt.quick) pairs.resize(6);
    double worst = 0.0, worst_beyond_tail = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [a, q] = pairs[i];
        int sign = i % 2 == 0 ? +1 : -1;
        MtSeries rhs = mt_series_rhs(a, q, sign);
        double m0 = moment_Mstar(cplx(0.5), cplx(0.0), mod_reduce(sign * a, q), q).real();
        double diff = std::abs(rhs.value - m0);
        worst = std::max(worst, diff);
        worst_beyond_tail = std::max(worst_beyond_tail, diff - 3.0 * rhs.tail_estimate);
    }
    std::ostringstream note;
    note << "summands decay like c/j^2 (c ~ 0.04 q/a), so the truncated series cannot reach 1e-6; "
            "residual beyond 3x the estimated tail: "
         << worst_beyond_tail;
    return make_result("infinite reciprocity series vs central moment", worst, 1e-6, opt, note.str());
}

// ---- 7: the finite split, two residual paths --------------------------------

inline CheckResult mtc_cross_paths(const SuiteOptions& opt) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs = {{2, 7}, {3, 11}, {5, 13}, {2, 101}};
    if (opt.quick) pairs.pop_back();
    double worst = 0.0;
    for (auto [a, q] : pairs)
        for (int N : {0, 1})
            for (int sign : {+1, -1})
                worst = std::max(worst,
                                 std::abs(mtc_truncated(a, q, sign, N).psi - psi_N(N, a, q, sign)));
    return make_result("psi_N: moment path vs Estermann path, N in {0,1}", worst, 1e-7, opt);
}

// ---- 8: continuity probe ----------------------------------------------------

inline CheckResult et_smallness(const SuiteOptions& opt) {
    std::int64_t qmax = opt.quick ? 101 : 229;
    auto pairs = prime_pairs(qmax);
    std::vector<double> vals(pairs.size());
    parallel_for(static_cast<std::int64_t>(pairs.size()), opt.threads, [&](std::int64_t i) {
        auto [a, q] = pairs[i];
        vals[i] = std::abs(young_error(a, q)) * q / a;
    });
    double worst = *std::max_element(vals.begin(), vals.end());
    return make_result("reciprocity error: max |E(a,q)| q/a over prime pairs", worst, 10.0, opt);
}

inline CheckResult et_continuity(const SuiteOptions& opt) {
    struct P { std::int64_t a, q, a2, q2; };
    const std::vector<P> pairs = {
        {2, 7, 89, 311}, {3, 11, 103, 379}, {5, 13, 127, 331}, {7, 17, 139, 337}, {11, 31, 109, 307}};
    double worst = 0.0;
    for (const auto& p : pairs) {
        double d = std::abs(psi_tilde(p.a, p.q, +1, 0) - psi_tilde(p.a2, p.q2, +1, 0));
        worst = std::max(worst, d);
    }
    return make_result("continuity probe of psi~_0 at |dx| <= 1e-3", worst, 0.05, opt);
}

// ---- 9 & 10: the continued-fraction formulas --------------------------------

inline CheckResult ypo_end_to_end(const SuiteOptions& opt) {
    std::int64_t qmax = opt.quick ? 31 : 101;
    auto primes = primes_up_to(qmax);
    std::vector<double> worst_q(primes.size(), 0.0);
    parallel_for(static_cast<std::int64_t>(primes.size()), opt.threads, [&](std::int64_t i) {
        std::int64_t q = primes[i];
        double w = 0.0;
        for (std::int64_t a = 1; a < q; ++a) {
            for (int sign : {+1, -1}) {
                double lhs = rhs_Ypo(a, q, sign);
                double m0 = moment_Mstar(cplx(0.5), cplx(0.0), mod_reduce(sign * a, q), q).real();
                w = std::max(w, std::abs(lhs - m0));
            }
        }
        worst_q[i] = w;
    });
    double worst = *std::max_element(worst_q.begin(), worst_q.end());
    if (!opt.quick) {
        for (std::int64_t a : {2, 92, 113, 228}) {
            double lhs = rhs_Ypo(a, 229, +1);
            double m0 = moment_Mstar(cplx(0.5), cplx(0.0), a, 229).real();
            worst = std::max(worst, std::abs(lhs - m0));
        }
    }
    return make_result("chain formula vs central moment, all a, q <= 101 (+229 spots)", worst, 1e-6,
                       opt);
}

inline CheckResult ypc_partial_quotients(const SuiteOptions& opt) {
    std::int64_t qmax = opt.quick ? 101 : 229;
    double worst = 0.0;
    double l8 = euler_gamma - std::log(8.0 * pi);
    for (std::int64_t q : primes_up_to(qmax)) {
        for (std::int64_t a = 1; a < q; ++a) {
            ContinuedFraction cf = expand(a, q);
            double odd = 0.0, even = 0.0;
            for (int j = 1; j <= cf.kappa(); ++j) {
                double b = static_cast<double>(cf.quotients[j]);
                if (j % 2 == 1)
                    odd += std::sqrt(b) * (std::log(b) + l8);
                else
                    even += std::sqrt(b);
            }
            double resid = moment_M(a, q) - odd + pi / 2.0 * even;
            worst = std::max(worst, std::abs(resid) / std::max(1, cf.kappa()));
        }
    }
    return make_result("partial-quotient main terms: residual per chain step", worst, 10.0, opt);
}

// ---- 11: the two-twist splitting structure ----------------------------------

inline CheckResult hat_structure(const SuiteOptions& opt) {
    std::int64_t hk_max = opt.quick ? 5 : 10;
    std::int64_t qmax = opt.quick ? 199 : 500;
    double worst = 0.0;  // 0 = exact everywhere, 1 = some structural failure
    for (std::int64_t h = 1; h <= hk_max; ++h)
        for (std::int64_t k = 1; k <= hk_max; ++k) {
            if (gcd64(h, k) != 1) continue;
            for (std::int64_t q : primes_up_to(qmax)) {
                if (q < 4 * h * k) continue;
                if (gcd64(h, q) != 1 || gcd64(k, q) != 1) continue;
                TwoTwistSplit s = two_twist_cf_structure(h, k, q);
                if (!s.exact_match || !(s.middle_window < 2.0)) worst = 1.0;
            }
        }
    return make_result("two-twist expansion splits exactly with a bounded middle", worst, 0.5, opt);
}

// ---- 12 & 13: two-twist moment asymptotics ----------------------------------

inline CheckResult csb_main_term(const SuiteOptions& opt) {
    const std::vector<std::pair<std::int64_t, std::int64_t>> hk = {
        {1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 5}};
    std::int64_t qmax = opt.quick ? 101 : 229;
    double worst = 0.0;
    for (auto [h, k] : hk) {
        for (std::int64_t q : primes_up_to(qmax)) {
            if (q < std::max<std::int64_t>(61, 4 * h * k)) continue;
            for (int sign : {+1, -1}) {
                double main = moment_via_cf(sign, h, k, q);
                double brute = moment_two_twists(sign > 0 ? Parity::even : Parity::odd, h, k, q);
                double scale = std::sqrt(static_cast<double>(h + k)) * std::log((double)q);
                worst = std::max(worst, std::abs(brute - main) / scale);
            }
        }
    }
    return make_result("two-twist main term: residual / sqrt(h+k) log q", worst, 10.0, opt);
}

inline CheckResult c3t_relation(const SuiteOptions& opt) {
    const std::vector<std::array<std::int64_t, 3>> triples = {{2, 3, 29}, {3, 5, 61}, {2, 5, 103}};
    double worst = 0.0;
    for (auto [h, k, q] : triples) {
        for (int sign : {+1, -1}) {
            Parity par = sign > 0 ? Parity::even : Parity::odd;
            double sg = sign;
            double lhs = moment_two_twists(par, h, k, q) -
                         sg * moment_two_twists(par, h, q, k) -
                         sg * moment_two_twists(par, k, q, h) - moment_via_cf(sign, h, k, q);
            worst = std::max(worst, std::abs(lhs) / std::log((double)q));
        }
    }
    return make_result("three-term relation: residual / log q", worst, 10.0, opt);
}

// ---- 14: the orthogonality step ---------------------------------------------

inline CheckResult fccc_orthogonality(const SuiteOptions& opt) {
    std::vector<std::int64_t> qs = opt.quick ? std::vector<std::int64_t>{61}
                                             : std::vector<std::int64_t>{61, 101};
    double worst = 0.0;
    std::ostringstream trend;
    trend << "trend (1/q) sum f^2 / log^4 q (1/pi^2 = " << 1.0 / (pi * pi) << "):";
    for (std::int64_t q : qs) {
        const CharacterTable& tab = character_table(q);
        for (auto par : {Parity::even, Parity::odd}) {
            double lhs = 0.0;
            for (std::int64_t a = 1; a < q; ++a) {
                cplx acc = 0.0;
                for (std::int64_t t = 1; t < q - 1; ++t) {
                    if (tab.parity(t) != par) continue;
                    acc += std::norm(dirichlet_l(tab, t, cplx(0.5))) * tab.chi(t, a);
                }
                lhs += acc.real() * acc.real();
            }
            lhs *= static_cast<double>(q) / ((double)(q - 1) * (q - 1)) / q;
            double rhs = 0.0;
            for (std::int64_t t = 1; t < q - 1; ++t) {
                if (tab.parity(t) != par) continue;
                double n = std::norm(dirichlet_l(tab, t, cplx(0.5)));
                rhs += n * n;
            }
            rhs /= (double)(q - 1);
            worst = std::max(worst, std::abs(lhs - rhs));
            // the asymptotic is reported only: desk-scale q cannot separate
            // (log q)^4/pi^2 from the lower-order terms
            double f2 = 0.0;
            for (std::int64_t a = 1; a <= q; ++a) {
                double f = f_pm(par == Parity::even ? +1 : -1, a, q);
                f2 += f * f;
            }
            trend << ' ' << f2 / q / std::pow(std::log((double)q), 4.0);
        }
    }
    return make_result("fourth-moment orthogonality identity", worst, 1e-7, opt, trend.str());
}

// ---- 15 & 16: special values of the Estermann function -----------------------

inline CheckResult ffsd_limit(const SuiteOptions& opt) {
    std::int64_t kmax = opt.quick ? 12 : 20;
    double worst = 0.0;
    for (std::int64_t k = 1; k <= kmax; ++k)
        for (std::int64_t h = 1; h < std::max<std::int64_t>(k, 2); ++h) {
            if (gcd64(h, k) != 1) continue;
            cplx v = dedekind_limit_check(h, k, 4e-3);
            cplx target = iunit * pi * to_double(dedekind_sum(h, k));
            worst = std::max(worst, std::abs(v - target));
        }
    return make_result("alpha -> -1 limit reaches pi i s(h/k)", worst, 1e-4, opt);
}

inline CheckResult ffcd_exact(const SuiteOptions& opt) {
    std::int64_t kmax = opt.quick ? 16 : 40;
    double worst = 0.0;
    for (std::int64_t k = 1; k <= kmax; ++k)
        for (std::int64_t h = (k == 1 ? 0 : 1); h < std::max<std::int64_t>(k, 1); ++h) {
            if (gcd64(h, k) != 1) continue;
            cplx v = estermann_D(cplx(0.0), cplx(0.0), h, k);
            cplx want = cplx(0.25) + 0.5 * iunit * cotangent_sum(h, k);
            worst = std::max(worst, std::abs(v - want));
        }
    return make_result("central value D(0,0;h/k) = 1/4 + (i/2) c0(h/k)", worst, 1e-9, opt);
}

// ---- 17: special-function invariants -----------------------------------------

inline CheckResult specfun_invariants(const SuiteOptions& opt) {
    double worst_rel = 0.0;
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> re(-5.0, 5.0), im(-20.0, 20.0);
    int tested = 0;
    while (tested < (opt.quick ? 40 : 200)) {
        cplx s(re(rng), im(rng));
        if (std::abs(s.imag()) < 0.1 && std::abs(s.real() - std::round(s.real())) < 0.1) continue;
        cplx lhs = gamma(s) * gamma(1.0 - s);
        cplx rhs = pi / std::sin(pi * s);
        worst_rel = std::max(worst_rel, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        ++tested;
    }
    double w = worst_rel * 1e2;  // reflection tolerance 1e-10 scaled into 1e-8 units
    // zeta functional equation
    double worst_fe = 0.0;
    for (double rr : {-15.5, -6.3, -1.5, 0.3, 2.0, 8.0, 19.0})
        for (double ii : {0.0, 3.0, 17.0, 50.0}) {
            cplx s(rr, ii);
            if (std::abs(s - cplx(1.0)) < 0.2 || std::abs(s) < 0.2) continue;
            cplx lhs = riemann_zeta(1.0 - s);
            cplx rhs = 2.0 * std::pow(cplx(2.0 * pi), -s) * gamma(s) * std::cos(pi * s / 2.0) *
                       riemann_zeta(s);
            worst_fe = std::max(worst_fe, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
    // Hurwitz direct-sum oracle at Re s >= 1.5
    double worst_h = 0.0;
    for (auto [s, x] : {std::pair<cplx, double>{cplx(1.5), 0.25}, {cplx(2.5, 3.0), 0.7}}) {
        cplx acc = 0.0;
        const std::int64_t N = opt.quick ? 200000 : 1000000;
        for (std::int64_t n = N - 1; n >= 0; --n) acc += std::pow(cplx(n + x), -s);
        double T = N + x;
        acc += std::pow(cplx(T), 1.0 - s) / (s - 1.0) - 0.5 * std::pow(cplx(T), -s);
        worst_h = std::max(worst_h, std::abs(hurwitz_zeta(s, x) - acc));
    }
    // 2F1 partial sums with the integral tail
    double worst_f = 0.0;
    for (auto [a, b, c] : {std::tuple<cplx, cplx, cplx>{cplx(0.5), cplx(0.5), cplx(2.5)},
                           {cplx(-0.5), cplx(0.5), cplx(1.2)}}) {
        cplx acc = 1.0, term = 1.0;
        const int N = 40000;
        for (int n = 0; n < N; ++n) {
            term *= (a + (double)n) * (b + (double)n) / ((c + (double)n) * (n + 1.0));
            acc += term;
        }
        acc += term * (double)N / (c - a - b).real();
        worst_f = std::max(worst_f, std::abs(acc - gauss_2f1_unit(a, b, c)));
    }
    // directed-power consistency
    double worst_d = 0.0;
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int i = 0; i < 30; ++i) {
        cplx zz = std::polar(0.3 + u(rng), u(rng) * pi);
        cplx ss(u(rng), u(rng));
        cplx prod = directed_power(DirectedBase::i_over_z, zz, ss) *
                    directed_power(DirectedBase::minus_i_z, zz, ss);
        worst_d = std::max(worst_d, std::abs(prod - cplx(1.0)));
    }
    // normalize every piece to its own stated tolerance, then report the max ratio
    double ratio = std::max({worst_rel / 1e-10, worst_fe / 1e-10, worst_h / 1e-8,
                             worst_f / 1e-8, worst_d / 1e-12});
    (void)w;
    std::ostringstream note;
    note << "reflection " << worst_rel << ", functional eq " << worst_fe << ", hurwitz oracle "
         << worst_h << ", 2F1 " << worst_f << ", directed powers " << worst_d;
    return make_result("special-function invariants (worst residual / tolerance)", ratio, 1.0, opt,
                       note.str());
}

// ---- 18: figure datasets ------------------------------------------------------

inline CheckResult figures(const SuiteOptions& opt) {
    std::int64_t qmax = opt.quick ? 31 : 229;
    std::vector<int> orders = opt.quick ? std::vector<int>{0, 1} : std::vector<int>{0, 1, 2, 3};

    auto f1a = figure1_rows(qmax, 1);
    auto f1b = figure1_rows(qmax, opt.threads);
    std::ostringstream s1a, s1b;
    write_figure1_csv(s1a, f1a);
    write_figure1_csv(s1b, f1b);
    bool deterministic = s1a.str() == s1b.str();

    auto f2a = figure2_rows(qmax, orders, std::nullopt, opt.threads);
    std::ostringstream s2a;
    write_figure2_csv(s2a, f2a);

    // brute-force spot oracles, fully independent of the production L path
    const CharacterTable& t3 = character_table(3);
    std::vector<cplx> chi3(3);
    for (std::int64_t n = 0; n < 3; ++n) chi3[n] = t3.chi(1, n);
    cplx l3 = l_brute(chi3, cplx(0.5), 4000000);
    double m23_oracle = std::sqrt(3.0) / 2.0 * (std::norm(l3) * t3.chi(1, 2)).real();
    double spot1 = 1.0;
    for (const auto& r : f1a)
        if (r.a == 2 && r.q == 3) spot1 = std::abs(r.m - m23_oracle);

    // psi~_0(2/7) through the explicit removed-main-terms assembly
    const CharacterTable& t7 = character_table(7);
    double m27_oracle = 0.0;
    for (std::int64_t t = 1; t < 6; ++t) {
        std::vector<cplx> chi7(7);
        for (std::int64_t n = 0; n < 7; ++n) chi7[n] = t7.chi(t, n);
        cplx l = l_brute(chi7, cplx(0.5), 4000000);
        m27_oracle += (std::norm(l) * t7.chi(t, 2)).real();
    }
    m27_oracle *= std::sqrt(7.0) / 6.0;
    double zh = riemann_zeta(cplx(0.5)).real();
    double ratio = 7.0 / 2.0;
    double psi_oracle = m27_oracle - 0.0 /* M(-7 mod 2, 2): no primitive characters */
                        - std::sqrt(ratio) * (std::log(ratio) + euler_gamma - std::log(8.0 * pi)) -
                        zh * zh *
                            (1.0 - 2.0 * std::sqrt(7.0) / 6.0 * (1.0 - 1.0 / std::sqrt(7.0)) +
                             2.0 * std::sqrt(2.0) * (1.0 - 1.0 / std::sqrt(2.0)));
    double spot2 = 1.0;
    for (const auto& r : f2a)
        if (r.a == 2 && r.q == 7 && r.n == 0) spot2 = std::abs(r.psi - psi_oracle);

    double worst = std::max(spot1, spot2);
    std::ostringstream note;
    note << (deterministic ? "byte-identical across thread counts; " : "NOT DETERMINISTIC; ")
         << "spot |dM(2,3)| = " << spot1 << ", spot |dpsi(2,7)| = " << spot2;
    if (!deterministic) worst = 1.0;
    return make_result("figure datasets: determinism and brute-force spot values", worst, 1e-9, opt,
                       note.str());
}

}  // namespace suites

struct Criterion {
    int number;
    std::string suite;
    CheckResult (*run)(const SuiteOptions&);
};

inline const std::vector<Criterion>& all_criteria() {
    static const std::vector<Criterion> list = {
        {1, "ctff", suites::dedekind_bridge},
        {2, "ctff", suites::cotangent_bridge},
        {3, "tff", suites::tff_identity},
        {4, "tff", suites::ffs_ftrr_identity},
        {5, "mtc", suites::rtfs_upper_half_plane},
        {6, "mt", suites::mt_series},
        {7, "mtc", suites::mtc_cross_paths},
        {8, "et", suites::et_smallness},
        {8, "et", suites::et_continuity},
        {9, "ypo", suites::ypo_end_to_end},
        {10, "ypc", suites::ypc_partial_quotients},
        {11, "hat", suites::hat_structure},
        {12, "csb", suites::csb_main_term},
        {13, "c3t", suites::c3t_relation},
        {14, "fccc", suites::fccc_orthogonality},
        {15, "sums", suites::ffsd_limit},
        {16, "sums", suites::ffcd_exact},
        {17, "specfun", suites::specfun_invariants},
        {18, "figures", suites::figures},
    };
    return list;
}

inline std::vector<std::string> suite_names() {
    return {"specfun", "tff", "ctff", "mt", "mtc", "ypo", "ypc", "hat", "csb", "c3t",
            "sums", "fccc", "et", "figures", "all"};
}

inline std::vector<std::pair<int, CheckResult>> run_suite(const std::string& name,
                                                          const SuiteOptions& opt) {
    std::vector<std::pair<int, CheckResult>> out;
    for (const auto& c : all_criteria()) {
        if (name == "all" || c.suite == name) out.emplace_back(c.number, c.run(opt));
    }
    if (out.empty()) throw domain_error("unknown suite: " + name);
    return out;
}

}  // namespace twm
