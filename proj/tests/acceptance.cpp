// SPDX-License-Identifier: Apache-2.0
// One line per acceptance criterion.  Exit status is 0 iff the set of failing
// criteria equals the --expect-fail set (empty by default).
#include "support.hpp"

#include "gic/bounds.hpp"
#include "gic/cli.hpp"
#include "gic/eigstruct.hpp"
#include "gic/exclusion.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

using namespace gic;
using namespace gic::testing;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string join(const std::vector<u64> &v)
{
    std::ostringstream s;
    s << "{";
    for (size_t i = 0; i < v.size(); ++i)
        s << (i ? "," : "") << v[i];
    s << "}";
    return s.str();
}

Outcome c1()
{
    Int d = discriminant(septic().model);
    return {d == Int(45427) * 45427, "disc = " + d.get_str()};
}

Outcome c2()
{
    Factorization fac = factor_mod(septic().model, 45427);
    std::vector<std::pair<std::vector<u64>, unsigned>> got, want{
        {{10504, 1}, 2}, {{13963, 1}, 2}, {{35727, 27613, 41919, 1}, 1}};
    std::string text;
    for (const auto &[phi, e] : fac.factors) {
        got.emplace_back(phi.coeffs(), e);
        text += "(" + phi.to_string() + ")^" + std::to_string(e);
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return {got == want && fac.unit == 1, text};
}

Outcome c3()
{
    A7Certificate a = certify_A7(septic().model, 200);
    return {a.certified, "square disc, 7-cycle at " + std::to_string(a.irreducible_witness.value_or(0)) +
                             ", (5,1,1) at " + std::to_string(a.five_cycle_witness.value_or(0))};
}

Outcome c4()
{
    auto n = count_points(septic().model, 3, 3);
    IntPoly f = charpoly_from_counts(n, 3, 3);
    return {n == std::vector<Int>{5, 13, 29} && f == IntPoly{27, 9, 6, 2, 2, 1, 1},
            "counts (" + n[0].get_str() + "," + n[1].get_str() + "," + n[2].get_str() + "), " + f.to_string()};
}

Outcome c5()
{
    CommandResult r = cmd_weyl_scan(septic(), 3, 53, CliOptions{});
    auto ex = r.report["results"]["exceptions"].get<std::vector<u64>>();
    auto skipped = r.report["skipped_primes"].get<std::vector<u64>>();
    return {ex == std::vector<u64>{17},
            "uncertified good primes " + join(ex) + " (expected {17}); bad primes skipped " + join(skipped)};
}

Outcome c6()
{
    MainBound b = main_bound({1, 3, parse_rat("-2.511"), 3});
    bool ok = b.dominant == 3 && b.value.ln >= 3.70e8 && b.value.ln <= 3.80e8 &&
              b.value.radius <= 1e-3 * b.value.ln;
    char buf[128];
    std::snprintf(buf, sizeof buf, "ln = %.6e +- %.1e, dominant term %d", b.value.ln, b.value.radius, b.dominant);
    return {ok, buf};
}

Outcome c7()
{
    NormEngine E3(IntPoly{27, 9, 6, 2, 2, 1, 1}, 3);
    ExclusionReport t3 = tensor_exclusion(E3, 1, 3, 1000000);
    bool small = t3.unconstrained == 0;
    std::string ps;
    for (const auto &p : t3.small_primes) {
        small = small && (p == 2 || p == 3);
        ps += p.get_str() + " ";
    }
    for (const auto &c : t3.cofactors)
        small = small && mpz_odd_p(c.get_mpz_t()) && !mpz_divisible_ui_p(c.get_mpz_t(), 3);
    NormEngine E5(frobenius_charpoly(septic(), 5), 5);
    ExclusionReport t5 = tensor_exclusion(E5, 1, 3, 1000000);
    bool no3 = t5.unconstrained == 0 && !t5.small_primes.count(3);
    for (const auto &c : t5.cofactors)
        no3 = no3 && !mpz_divisible_ui_p(c.get_mpz_t(), 3);
    std::string p5;
    for (const auto &p : t5.small_primes)
        p5 += p.get_str() + " ";
    return {small && no3, "primes at 3: " + ps + "(" + std::to_string(t3.cofactors.size()) +
                              " cofactors); primes at 5: " + p5};
}

Outcome c8()
{
    std::mt19937_64 rng(8);
    std::vector<std::pair<IntPoly, long>> polys{{IntPoly{27, 9, 6, 2, 2, 1, 1}, 3},
                                                {IntPoly{125, 25, 5, 11, 1, 1, 1}, 5}};
    const long qs[] = {3, 5, 7};
    for (int i = 0; i < 20; ++i)
        polys.emplace_back(random_certified_weil(rng, 3, qs[i % 3]), qs[i % 3]);
    size_t count = 0, bad = 0;
    mpfr_prec_t maxp = 0;
    for (const auto &[f, q] : polys) {
        NormEngine E(f, q);
        const auto rels = structural_relations(3, q, 4);
        std::vector<Int> vals;
        for (const auto &r : rels) {
            vals.push_back(E.norm(r));
            bad += !(vals.back() != 0 && log_abs(vals.back()) <= log_weil_bound(r, 3, q) + 1e-9);
        }
        // Recheck at a fixed doubled precision.
        const mpfr_prec_t twice = 2 * E.max_prec_used();
        for (size_t i = 0; i < rels.size(); ++i)
            bad += E.norm_at(rels[i], twice) != vals[i];
        count += rels.size();
        F1F2 ff = f1_f2(E, {0, 1, 2, 3, 4, 5});
        bool ok = ff.f1 != 0 && ff.f2 != 0 && log_abs(ff.f1) <= ff.log_bound_f1 &&
                  log_abs(ff.f2) <= ff.log_bound_f2;
        bad += !ok;
        count += 2;
        maxp = std::max(maxp, E.max_prec_used());
    }
    return {bad == 0, std::to_string(count) + " norms on " + std::to_string(polys.size()) +
                          " polynomials, " + std::to_string(bad) + " failures, max precision with rechecks " +
                          std::to_string(maxp) + " bits"};
}

Outcome c9()
{
    std::mt19937_64 rng(9);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
        auto [f, q] = random_quadratic_weil(rng);
        Int n = galois_orbit_norm(f, q, {mono({{0, 1}}), mono({{1, 1}})});
        Int d = discriminant(f);
        bad += !(n == d || n == -d);
    }
    return {bad == 0, "100 quadratics, " + std::to_string(bad) + " mismatches"};
}

Outcome c10()
{
    std::mt19937_64 rng(10);
    const long qs[] = {2, 3, 4, 5, 7, 8, 9, 11, 13};
    int done = 0, bad = 0;
    while (done < 100) {
        int g = 1 + static_cast<int>(rng() % 3);
        long q = qs[rng() % 9];
        auto f = random_weil(rng, g, q);
        if (!f)
            continue;
        auto n = counts_from_charpoly(*f, q, g);
        IntPoly back = charpoly_from_counts(n, q, g);
        bad += !(back == *f && counts_from_charpoly(back, q, g) == n);
        ++done;
    }
    return {bad == 0, "100 Weil polynomials with g <= 3, " + std::to_string(bad) + " mismatches"};
}

Outcome c11()
{
    int primes = 0, bad = 0;
    u64 worst_margin = ~0ULL;
    for (u64 ell : primes_up_to(199)) {
        if (ell < 103)
            continue;
        SigmaGammaScan s = sigma_gamma_scan(ell);
        ++primes;
        bool ok = s.independent + 50 >= (ell - 1) / 2;
        bad += !ok;
        if (ok)
            worst_margin = std::min(worst_margin, s.independent + 50 - (ell - 1) / 2);
    }
    return {bad == 0, std::to_string(primes) + " primes, " + std::to_string(bad) +
                          " below (ell-1)/2 - 50, smallest margin " + std::to_string(worst_margin)};
}

Outcome c12()
{
    Chebotarev c = chebotarev_B(0, 1, {2, 3}, 2);
    const double formula = 70 * std::pow(std::log(24.0), 2);
    const bool matches_formula = std::fabs(c.B - formula) < 1e-9;
    const bool matches_decimal = std::fabs(c.B - 707.17) <= 0.01;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "B = %.4f; equals 70(ln 24)^2: %s; within 707.17 +- 0.01: %s", c.B,
                  matches_formula ? "yes" : "no", matches_decimal ? "yes" : "no");
    return {matches_formula && matches_decimal, buf};
}

Outcome c13()
{
    WeightVerdict v = verify_weight_identities();
    std::string s;
    for (const auto &f : v.families)
        s += f.name + (f.ok() ? " ok " : " FAILED ");
    return {v.ok(), s};
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Acceptance criteria"};
    std::string expect;
    app.add_option("--expect-fail", expect, "Comma separated criteria known to fail");
    CLI11_PARSE(app, argc, argv);
    std::set<int> expected;
    {
        std::string tok;
        std::istringstream in(expect);
        while (std::getline(in, tok, ','))
            if (!tok.empty())
                expected.insert(std::stoi(tok));
    }

    struct Crit {
        const char *name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Crit> crits = {
        {"discriminant of the septic is 45427^2", 1, c1},
        {"factorization mod 45427", 1, c2},
        {"Galois group A_7 with prime bound 200", 5, c3},
        {"point counts and charpoly at 3", 1, c4},
        {"weyl-scan 3..53 fails exactly at 17 (bound 1e4)", 120, c5},
        {"main bound window, third term dominant", 1, c6},
        {"tensor exclusion at 3 within {2,3}; 3 excluded at 5", 600, c7},
        {"norm integrality suite", 900, c8},
        {"g = 1 orbit norm equals +-disc", 5, c9},
        {"Newton roundtrip", 5, c10},
        {"sigma_gamma weak independence counts, 103..199", 30, c11},
        {"chebotarev_B(Q,{2,3},2) = 707.17 +- 0.01", 1, c12},
        {"minuscule weight identities", 1, c13},
    };

    std::set<int> failed;
    for (size_t i = 0; i < crits.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = crits[i].run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = s <= crits[i].limit_s;
        bool pass = o.pass && in_time;
        if (!pass)
            failed.insert(id);
        std::printf("%s %2d %s: %s [%.2f s / %.0f s]%s\n", pass ? "PASS" : "FAIL", id, crits[i].name,
                    o.detail.c_str(), s, crits[i].limit_s, in_time ? "" : " over time limit");
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria pass\n", crits.size() - failed.size(), crits.size());
    if (failed != expected) {
        std::printf("failing set differs from the expected set\n");
        return 1;
    }
    return 0;
}
