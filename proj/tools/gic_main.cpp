// SPDX-License-Identifier: Apache-2.0
// gic: Galois image certification for hyperelliptic Jacobians.
#include "gic/cli.hpp"
#include "gic/errors.hpp"
#include "gic/roots.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

std::vector<std::string> split_csv(const std::string &s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Certify Galois images of hyperelliptic Jacobians"};
    app.require_subcommand(1);
    app.fallthrough();

    gic::CliOptions opt;
    long prec = 0;
    unsigned long trial = opt.trial_bound;
    unsigned long long seed = 0, prime_bound = 0;
    app.add_option("--prec", prec, "Starting precision in bits for orbit norms (0: automatic)")
        ->envname("GIC_PREC")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--trial-bound", trial, "Trial division bound for reported primes")
        ->envname("GIC_TRIAL_BOUND")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Seed for randomized factoring and field construction")
        ->envname("GIC_SEED");
    app.add_option("--prime-bound", prime_bound, "Prime bound for Galois certification (0: default)")
        ->envname("GIC_PRIME_BOUND");

    std::string curve_path, poly, q_str = "0";
    unsigned long long p = 0, pmin = 3, pmax = 53;
    std::string expect;

    auto *charpoly = app.add_subcommand("charpoly", "Frobenius characteristic polynomial at p");
    charpoly->add_option("--curve", curve_path, "Curve file")->required();
    charpoly->add_option("--p", p, "Odd prime of good reduction")->required();

    auto *galois = app.add_subcommand("galois-cert", "Certify Gal(f) = W_g");
    galois->add_option("--poly", poly, "Coefficients, constant term first")->required();
    galois->add_option("--q", q_str, "Weil weight q")->required();

    auto *a7 = app.add_subcommand("a7-cert", "Certify Gal(f) = A_7 for a septic");
    a7->add_option("--poly", poly, "Coefficients, constant term first")->required();

    auto *scan = app.add_subcommand("weyl-scan", "Certify Frobenius Galois groups over a prime range");
    scan->add_option("--curve", curve_path, "Curve file")->required();
    scan->add_option("--pmin", pmin, "Smallest prime");
    scan->add_option("--pmax", pmax, "Largest prime");
    scan->add_option("--expect-exceptions", expect, "Comma separated primes expected to fail");

    gic::BoundsArgs bargs;
    int g = 0;
    long degK = 0;
    std::string height, qv;
    double lognorm = 0, cconst = 0;
    auto *bounds = app.add_subcommand("bounds", "Evaluate the explicit bounds in log space");
    bounds->add_option("--mode", bargs.mode, "main | grh3 | uncond3")
        ->check(CLI::IsMember({"main", "grh3", "uncond3"}));
    auto *o_g = bounds->add_option("--g", g, "Dimension");
    auto *o_deg = bounds->add_option("--degK", degK, "Degree of the number field");
    auto *o_h = bounds->add_option("--height", height, "Faltings height (rational or decimal)");
    auto *o_qv = bounds->add_option("--qv", qv, "Residue field size at the auxiliary place");
    bounds->add_option("--logdisc", bargs.logdisc, "log |Delta_K|");
    auto *o_ln = bounds->add_option("--lognorm", lognorm, "log of the conductor norm");
    auto *o_c = bounds->add_option("--c", cconst, "Unconditional Chebotarev constant");

    unsigned long long v = 0;
    std::string classes = "tensor,lie,minuscule,induced";
    auto *exclude = app.add_subcommand("exclude", "Exclusion reports for maximal subgroup classes");
    exclude->add_option("--curve", curve_path, "Curve file")->required();
    exclude->add_option("--v", v, "Auxiliary prime")->required();
    exclude->add_option("--classes", classes, "Comma separated: tensor,lie,minuscule,induced");

    std::string ex_curve;
    auto *ex12 = app.add_subcommand("example12", "End-to-end regression on the reference septic");
    ex12->add_option("--curve", ex_curve, "Replace the reference curve");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        // --help exits 0; every usage error maps to 2.
        return app.exit(e) == 0 ? 0 : 2;
    }

    opt.prec = static_cast<mpfr_prec_t>(prec);
    opt.trial_bound = trial;
    opt.seed = seed;
    if (prime_bound)
        opt.prime_bound = prime_bound;

    gic::set_escalation_hook([](mpfr_prec_t from, mpfr_prec_t to, const char *why) {
        std::fprintf(stderr, "precision escalation: %ld -> %ld bits (%s)\n", static_cast<long>(from),
                     static_cast<long>(to), why);
    });

    gic::CommandResult res;
    try {
        if (*charpoly) {
            res = gic::cmd_charpoly(gic::load_curve(curve_path), p, opt);
        } else if (*galois) {
            res = gic::cmd_galois_cert(gic::parse_poly_list(poly), gic::Int(q_str), opt);
        } else if (*a7) {
            res = gic::cmd_a7_cert(gic::parse_poly_list(poly), opt);
        } else if (*scan) {
            std::optional<std::vector<gic::u64>> ex;
            if (scan->count("--expect-exceptions")) {
                ex.emplace();
                for (const auto &s : split_csv(expect))
                    ex->push_back(std::stoull(s));
            }
            res = gic::cmd_weyl_scan(gic::load_curve(curve_path), pmin, pmax, opt, ex);
        } else if (*bounds) {
            if (*o_g)
                bargs.g = g;
            if (*o_deg)
                bargs.degK = degK;
            if (*o_h)
                bargs.height = gic::parse_rat(height);
            if (*o_qv)
                bargs.qv = gic::Int(qv);
            if (*o_ln)
                bargs.lognorm = lognorm;
            if (*o_c)
                bargs.c = cconst;
            res = gic::cmd_bounds(bargs, opt);
        } else if (*exclude) {
            res = gic::cmd_exclude(gic::load_curve(curve_path), v, split_csv(classes), opt);
        } else if (*ex12) {
            std::optional<gic::Curve> c;
            if (!ex_curve.empty())
                c = gic::load_curve(ex_curve);
            res = gic::cmd_example12(opt, c);
        }
    } catch (const gic::InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        // gmpxx rejects malformed integers this way.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cout << res.report.dump(2) << "\n";
    if (res.report["results"].contains("error"))
        std::cerr << "error: " << res.report["results"]["error"].get<std::string>() << "\n";
    return res.exit_code;
}
