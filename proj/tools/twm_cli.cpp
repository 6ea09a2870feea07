// twm: twisted second moments of Dirichlet L-functions at the command line.
//
//   twm figure --which 1 --qmax 229 --out fig1.csv
//   twm figure --which 2 --qmax 229 --N 0,1,2,3 --out fig2.csv
//   twm verify --suite all [--quick] [--tol 1.0] [--seed N] [--threads K]
//   twm eval <object> <params...>
//
// Exit codes: 0 success, 1 I/O error, 2 verification or parameter failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "twm/datasets.hpp"
#include "twm/suites.hpp"
#include "twm/twm.hpp"

namespace {

using namespace twm;

std::string fmt17(double v) { return twm::detail::fmt_double(v, 17); }

cplx parse_complex(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return cplx(std::stod(s));
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

int parse_sign(const std::string& s) {
    if (s == "+" || s == "+1" || s == "plus") return +1;
    if (s == "-" || s == "-1" || s == "minus") return -1;
    throw domain_error("sign must be one of +, -, +1, -1");
}

int run_figure(int which, std::int64_t qmax, const std::vector<int>& orders,
               const std::string& out, const std::optional<NearSampler>& near, int threads) {
    std::ostringstream body;
    body.imbue(std::locale::classic());
    if (which == 1) {
        write_figure1_csv(body, figure1_rows(qmax, threads));
    } else {
        write_figure2_csv(body, figure2_rows(qmax, orders, near, threads));
    }
    if (out.empty() || out == "-") {
        std::cout << body.str();
        return 0;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << out << "\n";
        return 1;
    }
    f << body.str();
    f.flush();
    return f ? 0 : 1;
}

int run_verify(const std::string& suite, const SuiteOptions& opt) {
    auto results = run_suite(suite, opt);
    bool all_pass = true;
    const CheckResult* worst = nullptr;
    double worst_margin = -1.0;
    for (const auto& [num, r] : results) {
        std::printf("[%s] %2d %-58s residual %.3e  tol %.1e\n", r.pass ? "PASS" : "FAIL", num,
                    r.name.c_str(), r.residual, r.tolerance);
        if (!r.note.empty()) std::printf("         %s\n", r.note.c_str());
        if (!r.pass) {
            all_pass = false;
            double margin = r.residual / r.tolerance;
            if (margin > worst_margin) {
                worst_margin = margin;
                worst = &r;
            }
        }
    }
    if (!all_pass && worst)
        std::printf("worst offender: %s (residual %.3e, %.1fx over tolerance)\n",
                    worst->name.c_str(), worst->residual, worst_margin);
    return all_pass ? 0 : 2;
}

int run_eval(const std::string& object, const std::vector<std::string>& p) {
    auto need = [&](std::size_t n) {
        if (p.size() != n)
            throw domain_error("eval " + object + ": expected " + std::to_string(n) + " parameters");
    };
    std::ostringstream os;
    os.imbue(std::locale::classic());
    if (object == "M") {
        need(2);
        os << fmt17(moment_M(std::stoll(p[0]), std::stoll(p[1])));
    } else if (object == "Mstar") {
        need(4);
        cplx v = moment_Mstar(parse_complex(p[0]), parse_complex(p[1]), std::stoll(p[2]),
                              std::stoll(p[3]));
        os << fmt17(v.real()) << ',' << fmt17(v.imag());
    } else if (object == "D") {
        need(4);
        cplx v = estermann_D(parse_complex(p[0]), parse_complex(p[1]), std::stoll(p[2]),
                             std::stoll(p[3]));
        os << fmt17(v.real()) << ',' << fmt17(v.imag());
    } else if (object == "eta") {
        need(2);
        cplx v = eta_value(std::stoll(p[0]), std::stoll(p[1]));
        os << fmt17(v.real()) << ',' << fmt17(v.imag());
    } else if (object == "psi") {
        if (p.size() != 3 && p.size() != 4) throw domain_error("eval psi: expected N a q [sign]");
        int sign = p.size() == 4 ? parse_sign(p[3]) : +1;
        os << fmt17(psi_N(std::stoi(p[0]), std::stoll(p[1]), std::stoll(p[2]), sign));
    } else if (object == "f") {
        need(3);
        os << fmt17(f_pm(parse_sign(p[0]), std::stoll(p[1]), std::stoll(p[2])));
    } else if (object == "dedekind") {
        need(2);
        os << dedekind_sum(std::stoll(p[0]), std::stoll(p[1]));
    } else if (object == "c0") {
        need(2);
        os << fmt17(cotangent_sum(std::stoll(p[0]), std::stoll(p[1])));
    } else if (object == "cf") {
        need(2);
        ContinuedFraction cf = expand(std::stoll(p[0]), std::stoll(p[1]));
        os << cf.quotients[0] << ';';
        for (int j = 1; j <= cf.kappa(); ++j) os << (j > 1 ? "," : "") << cf.quotients[j];
    } else {
        throw domain_error("unknown eval object: " + object);
    }
    std::cout << os.str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted second moments of Dirichlet L-functions"};
    app.require_subcommand(1);

    // figure
    auto* fig = app.add_subcommand("figure", "write moment/residual datasets as CSV");
    int which = 1;
    std::int64_t qmax = 229;
    std::string out;
    std::string orders_str = "0,1,2,3";
    std::string near_str;
    double window = 1e-3;
    int threads = default_threads();
    fig->add_option("--which", which, "dataset: 1 = (a/q, M(a,q)); 2 = (a/q, psi~_N)")
        ->check(CLI::Range(1, 2));
    fig->add_option("--qmax", qmax, "largest prime modulus")->check(CLI::Range(std::int64_t(3), std::int64_t(100000)));
    fig->add_option("--out", out, "output path ('-' for stdout)");
    fig->add_option("--N", orders_str, "comma-separated truncation orders (figure 2)");
    fig->add_option("--near", near_str,
                    "extra sampling near a rational p/r using larger primes (figure 2)");
    fig->add_option("--window", window, "half-width of the --near window");
    fig->add_option("--threads", threads, "worker threads");

    // verify
    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    std::string suite = "all";
    SuiteOptions opt;
    ver->add_option("--suite", suite, "one of: specfun tff ctff mt mtc et ypo ypc hat csb c3t sums fccc figures all")
        ->check(CLI::IsMember(suite_names()));
    ver->add_flag("--quick", opt.quick, "reduced grids (< 5 min)");
    ver->add_option("--tol", opt.tol_scale, "scale factor applied to every tolerance");
    ver->add_option("--seed", opt.seed, "seed for the randomized invariant samples");
    ver->add_option("--threads", opt.threads, "worker threads");

    // eval
    auto* ev = app.add_subcommand("eval", "evaluate one object, CSV to stdout");
    std::string object;
    std::vector<std::string> params;
    ev->add_option("object", object, "M Mstar D eta psi f dedekind c0 cf")->required();
    ev->add_option("params", params, "object parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (fig->parsed()) {
            std::vector<int> orders;
            std::stringstream ss(orders_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) orders.push_back(std::stoi(tok));
            std::optional<NearSampler> near;
            if (!near_str.empty()) {
                auto slash = near_str.find('/');
                if (slash == std::string::npos)
                    throw domain_error("--near expects a rational like 1/3");
                NearSampler ns;
                ns.p = std::stoll(near_str.substr(0, slash));
                ns.r = std::stoll(near_str.substr(slash + 1));
                ns.window = window;
                ns.qcap = std::max<std::int64_t>(1000, qmax);
                near = ns;
            }
            return run_figure(which, qmax, orders, out, near, threads);
        }
        if (ver->parsed()) {
            opt.threads = std::max(1, opt.threads);
            return run_verify(suite, opt);
        }
        if (ev->parsed()) return run_eval(object, params);
    } catch (const std::ios_base::failure&) {
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
