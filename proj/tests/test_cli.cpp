// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

#include "gic/cli.hpp"

#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using namespace gic;
using namespace gic::testing;
using nlohmann::json;

namespace {

const std::string kCurve = std::string(GIC_DATA_DIR) + "/septic.curve";

struct Run {
    int status;
    std::string out, err;
};

Run run_cli(const std::string &args, const std::string &env = "")
{
    const std::string err_path = "gic_cli_stderr.txt";
    std::string cmd = env + " " + GIC_CLI_PATH + " " + args + " 2>" + err_path;
    Run r{};
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    std::ifstream e(err_path);
    r.err.assign(std::istreambuf_iterator<char>(e), {});
    std::remove(err_path.c_str());
    return r;
}

bool all_pass(const json &report)
{
    for (const auto &a : report["assertions"])
        if (!a["pass"].get<bool>())
            return false;
    return true;
}

} // namespace

TEST_CASE("charpoly command")
{
    Run r = run_cli("charpoly --curve " + kCurve + " --p 3");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "charpoly");
    CHECK(j["results"]["charpoly"] == json({27, 9, 6, 2, 2, 1, 1}));
    CHECK(j["results"]["counts"] == json({5, 13, 29}));
    for (const char *k : {"inputs", "results", "assertions", "skipped_primes", "timing_ms"})
        CHECK(j.contains(k));

    Run bad = run_cli("charpoly --curve " + kCurve + " --p 2");
    CHECK(bad.status == 2);
    CHECK(json::parse(bad.out)["results"]["bad_prime"] == 2);
    CHECK(bad.err.find("p = 2") != std::string::npos);

    Run five = run_cli("charpoly --curve " + kCurve + " --p 5");
    CHECK(five.status == 0);
    CHECK(all_pass(json::parse(five.out)));
}

TEST_CASE("certification commands")
{
    Run g = run_cli("galois-cert --poly 27,9,6,2,2,1,1 --q 3 --prime-bound 500");
    CHECK(g.status == 0);
    CHECK(json::parse(g.out)["results"]["certificate"]["certified"] == true);
    Run a = run_cli("a7-cert --poly 3,-5,-1,5,4,-5,-1,1 --prime-bound 200");
    CHECK(a.status == 0);
    // Frobenius at 13 has group of order 24: certification must fail.
    Run f13 = run_cli("galois-cert --poly 2197,169,169,67,13,1,1 --q 13 --prime-bound 10000");
    CHECK(f13.status == 1);
    CHECK(json::parse(f13.out)["results"]["certificate"]["certified"] == false);
}

TEST_CASE("weyl-scan command")
{
    Run r = run_cli("weyl-scan --curve " + kCurve + " --pmin 3 --pmax 53");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["results"]["exceptions"] == json({13}));
    CHECK(j["results"]["certified"].size() == 14);
    CHECK(j["results"]["table"].size() == 15);

    Run e = run_cli("weyl-scan --curve " + kCurve + " --pmin 53 --pmax 3");
    CHECK(e.status == 0);
    CHECK(json::parse(e.out)["results"]["table"].empty());

    // A tiny-discriminant model: y^2 = x^3 - x has bad reduction only at 2.
    std::ofstream("tiny.curve") << "genus 1\ncoeffs 0 -1 0 1\n";
    Run t = run_cli("weyl-scan --curve tiny.curve --pmin 2 --pmax 11");
    CHECK(t.status == 0);
    json tj = json::parse(t.out);
    CHECK(tj["results"]["table"].size() == 4);
    std::remove("tiny.curve");

    Run x = run_cli("weyl-scan --curve " + kCurve + " --pmin 3 --pmax 20 --expect-exceptions 13");
    CHECK(x.status == 0);
    Run y = run_cli("weyl-scan --curve " + kCurve + " --pmin 3 --pmax 20 --expect-exceptions 17");
    CHECK(y.status == 1);
}

TEST_CASE("bounds command")
{
    Run m = run_cli("bounds --g 3 --degK 1 --height -2.511 --qv 3");
    CHECK(m.status == 0);
    double ln = json::parse(m.out)["results"]["main"]["value"]["ln"];
    CHECK(ln == doctest::Approx(3.76377e8).epsilon(1e-5));
    Run g2 = run_cli("bounds --g 2 --degK 1 --height -2.511 --qv 3");
    CHECK(g2.status == 2);
    Run grh = run_cli("bounds --mode grh3 --degK 1 --height -2.511 --lognorm 21.45");
    CHECK(grh.status == 0);
    CHECK(json::parse(grh.out)["results"]["threefold"]["ln"].is_number());
    Run miss = run_cli("bounds --mode grh3 --degK 1 --height 1");
    CHECK(miss.status == 2);
    Run bad = run_cli("bounds --mode nope");
    CHECK(bad.status == 2);
}

TEST_CASE("exclude command")
{
    Run r = run_cli("exclude --curve " + kCurve + " --v 3 --classes tensor");
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["results"]["reports"][0]["small_primes"] == json({2, 3}));
    CHECK(j["results"]["reports"][0]["class"] == "tensor");

    Run five = run_cli("exclude --curve " + kCurve + " --v 5 --classes tensor");
    CHECK(five.status == 0);
    CHECK(json::parse(five.out)["results"]["reports"][0]["small_primes"] == json({2, 5, 23}));

    // Certification fails at 13, so no exclusion is attempted.
    Run v13 = run_cli("exclude --curve " + kCurve + " --v 13 --classes tensor");
    CHECK(v13.status == 2);
    CHECK(v13.err.find("not certified") != std::string::npos);

    Run bogus = run_cli("exclude --curve " + kCurve + " --v 3 --classes frobnicate");
    CHECK(bogus.status == 2);
}

TEST_CASE("example12 passes, escalates quietly to the same values, and catches perturbations")
{
    CommandResult a = cmd_example12(CliOptions{});
    CHECK(a.exit_code == 0);
    CHECK(all_pass(a.report));
    CHECK(a.report["assertions"].size() == 10);

    Run lo = run_cli("example12 --prec 64");
    CHECK(lo.status == 0);
    CHECK(lo.err.find("precision escalation") != std::string::npos);
    json lj = json::parse(lo.out), aj = a.report;
    lj["inputs"].erase("prec");
    aj["inputs"].erase("prec");
    CHECK(canonical_dump(lj) == canonical_dump(aj));

    Curve c = septic();
    std::vector<Int> co = c.model.coeffs();
    co[0] += 1;
    CommandResult p = cmd_example12(CliOptions{}, make_curve(IntPoly(co), c.height));
    CHECK(p.exit_code == 1);
    CHECK_FALSE(all_pass(p.report));
}

TEST_CASE("determinism: identical inputs give byte-identical reports")
{
    CliOptions o;
    o.seed = 3;
    CommandResult a = cmd_exclude(septic(), 3, {"tensor", "minuscule"}, o);
    CommandResult b = cmd_exclude(septic(), 3, {"tensor", "minuscule"}, o);
    CHECK(canonical_dump(a.report) == canonical_dump(b.report));
    Run x = run_cli("charpoly --curve " + kCurve + " --p 7", "GIC_SEED=5");
    Run y = run_cli("charpoly --curve " + kCurve + " --p 7 --seed 5");
    json xj = json::parse(x.out), yj = json::parse(y.out);
    CHECK(xj["inputs"]["seed"] == 5);
    CHECK(canonical_dump(xj) == canonical_dump(yj));
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("charpoly --p 3").status == 2);
    CHECK(run_cli("charpoly --curve /nonexistent --p 3").status == 2);
    CHECK(run_cli("galois-cert --poly 1,x --q 3").status == 2);
}

TEST_CASE("polynomial lists")
{
    CHECK(parse_poly_list("27,9,6,2,2,1,1") == f3());
    CHECK(parse_poly_list("27 9 6 2 2 1 1") == f3());
    CHECK_THROWS_AS(parse_poly_list(""), InputError);
}
