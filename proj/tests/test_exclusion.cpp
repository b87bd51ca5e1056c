// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

#include "gic/exclusion.hpp"
#include "gic/roots.hpp"

#include <doctest.h>

using namespace gic;
using namespace gic::testing;

namespace {

std::set<Int> ints(std::initializer_list<const char *> v)
{
    std::set<Int> s;
    for (const char *x : v)
        s.insert(Int(x));
    return s;
}

} // namespace

TEST_CASE("identically vanishing relations")
{
    // mu_0 mu_5 = mu_1 mu_4 = q at g = 3.
    CHECK(identically_zero({mono({{0, 1}, {5, 1}}), mono({{1, 1}, {4, 1}})}, 3, 3));
    CHECK(identically_zero({mono({{0, 1}, {5, 1}}), mono({}, 3)}, 3, 3));
    CHECK(identically_zero({mono({{2, 2}, {3, 2}}), mono({}, 9)}, 3, 3));
    CHECK_FALSE(identically_zero({mono({{0, 1}, {5, 1}}), mono({}, 5)}, 3, 3));
    CHECK_FALSE(identically_zero({mono({{1, 2}}), mono({{0, 1}, {2, 1}})}, 3, 3));
}

TEST_CASE("canonical keys are orbit invariants")
{
    auto W = weyl_group(3);
    Relation r{mono({{1, 2}}), mono({{0, 1}, {2, 1}})};
    const std::string k = canonical_key(r, W);
    for (const auto &w : W)
        CHECK(canonical_key(apply(w, r), W) == k);
    CHECK(canonical_key({r.rhs, r.lhs}, W) == k);
    CHECK(canonical_key({mono({{1, 2}}), mono({{0, 1}, {4, 1}})}, W) != k);
}

TEST_CASE("single orbit norms on f3")
{
    NormEngine E(f3(), 3);
    Relation a{mono({{0, 1}, {2, 1}}), mono({{1, 1}, {3, 1}})};
    Relation b{mono({{1, 2}}), mono({{0, 1}, {2, 1}})};
    CHECK(E.norm(a) == Int("1499253470328324096"));
    CHECK(E.norm(b) == Int("1499253470328324096"));
    Relation c{mono({{1, 16}}), mono({{0, 8}, {2, 8}})};
    Int v = E.norm(c);
    CHECK(v.get_str().size() == 187);
    CHECK(v.get_str().substr(0, 18) == "487004607105664971");
    CHECK(log_abs(v) <= log_weil_bound(c, 3, 3));
}

TEST_CASE("orbit norms agree across an orbit and under precision doubling")
{
    NormEngine E(f3(), 3);
    auto W = weyl_group(3);
    Relation r{mono({{0, 1}, {1, 1}}), mono({{2, 1}, {4, 1}})};
    Int v = E.norm(r);
    CHECK(v != 0);
    const mpfr_prec_t p = E.max_prec_used();
    CHECK(E.norm_at(r, 2 * p) == v);
    for (size_t i = 0; i < W.size(); i += 7)
        CHECK(E.norm_at(apply(W[i], r), p) == v);
}

TEST_CASE("escalation from a low start precision reaches the same integer")
{
    int calls = 0;
    set_escalation_hook([&](mpfr_prec_t, mpfr_prec_t, const char *) { ++calls; });
    NormEngine lo(f3(), 3, 32), hi(f3(), 3);
    Relation r{mono({{1, 16}}), mono({{0, 8}, {2, 8}})};
    CHECK(lo.norm(r) == hi.norm(r));
    CHECK(calls > 0);
    set_escalation_hook(nullptr);
}

TEST_CASE("tensor exclusion on Frobenius at 3")
{
    NormEngine E(f3(), 3);
    ExclusionReport rep = tensor_exclusion(E, 1, 3, 1000000);
    CHECK(rep.small_primes == std::set<Int>{2, 3});
    CHECK(rep.cofactors.empty());
    CHECK(rep.unconstrained == 0);
    CHECK(rep.norms.size() == 6);
    CHECK(std::set<Int>(rep.gcds.begin(), rep.gcds.end()) ==
          ints({"531441", "136048896", "22876792454961", "18509302102818816", "1499253470328324096"}));
    CHECK(rep.bounds_hold());
    CHECK(rep.generators.size() == tensor_locus(1, 3).binomials.size());
}

TEST_CASE("tensor exclusion at 5 rules out 3")
{
    NormEngine E(f5(), 5);
    ExclusionReport rep = tensor_exclusion(E, 1, 3, 1000000);
    CHECK(rep.small_primes == std::set<Int>{2, 5, 23});
    CHECK(rep.cofactors.empty());
    CHECK(std::set<Int>(rep.gcds.begin(), rep.gcds.end()) ==
          ints({"244140625", "1000000000000", "59604644775390625", "37252902984619140625",
                "42700347900390625000000000000"}));
}

TEST_CASE("tensor locus generators")
{
    TensorLocus T = tensor_locus(1, 3);
    CHECK(T.variables.size() == 6);
    CHECK_THROWS_AS(tensor_locus(1, 2), InputError);
    NormEngine E1(IntPoly{3, 1, 1}, 3);
    CHECK_THROWS_AS(tensor_exclusion(E1, 1, 3, 100), InputError);
}

TEST_CASE("Lie, minuscule and induced reports on f3")
{
    NormEngine E(f3(), 3);
    ExclusionReport lie = lie_exclusion(E, 1000000);
    CHECK(lie.threshold_ln == doctest::Approx(48 * (std::log(2.0) + 4 * (std::sqrt(18.0) + 1) * std::log(3.0))));
    CHECK(lie.threshold_ln == doctest::Approx(1139.12).epsilon(1e-5));
    CHECK(lie.norms.size() == 15);
    CHECK(lie.bounds_hold());
    // Res(f3, x^16 - 3^8) is one of the recorded integers and is nonzero.
    Int res = resultant(f3(), IntPoly::monomial(1, 16) - IntPoly::monomial(int_pow(3, 8), 0));
    CHECK(res != 0);
    bool found = false;
    for (const auto &n : lie.norms)
        found = found || n.value == res;
    CHECK(found);

    ExclusionReport m14 = minuscule_exclusion(E, 1, 4, 1000000);
    CHECK(m14.threshold_ln == doctest::Approx(48 * std::log(18.0)));
    CHECK(m14.threshold_ln == doctest::Approx(138.738).epsilon(1e-5));
    CHECK(m14.bounds_hold());
    ExclusionReport m32 = minuscule_exclusion(E, 3, 2, 1000000);
    CHECK(m32.threshold_ln == doctest::Approx(191.471).epsilon(1e-5));
    CHECK(m32.bounds_hold());
    CHECK_THROWS_AS(minuscule_exclusion(E, 2, 2, 100), InputError);

    ExclusionReport ind = induced_exclusion(E, 1000000);
    CHECK(ind.vacuous);
    CHECK(ind.norms.empty());
}

TEST_CASE("g = 1 inputs are rejected or vacuous")
{
    NormEngine E(IntPoly{5, 3, 1}, 5);
    CHECK_THROWS_AS(lie_exclusion(E, 100), InputError);
    CHECK(induced_exclusion(E, 100).vacuous);
}

TEST_CASE("induced exclusion at g = 4 is nonempty")
{
    std::mt19937_64 rng(44);
    IntPoly f = random_certified_weil(rng, 4, 3);
    NormEngine E(f, 3);
    ExclusionReport rep = induced_exclusion(E, 1000);
    CHECK_FALSE(rep.vacuous);
    CHECK_FALSE(rep.norms.empty());
    CHECK(rep.bounds_hold());
}

TEST_CASE("f1 and f2 on f3")
{
    NormEngine E(f3(), 3);
    F1F2 a = f1_f2(E, {0, 1, 2, 3, 4, 5});
    CHECK(a.f1 > 0);
    CHECK(a.f2 > 0);
    CHECK(log_abs(a.f1) <= a.log_bound_f1);
    CHECK(log_abs(a.f2) <= a.log_bound_f2);
    F1F2 b = f1_f2(E, {2, 0, 5, 1, 3, 4});
    CHECK(b.f1 > 0);
    CHECK(b.log_bound_f1 == a.log_bound_f1);
    CHECK_THROWS_AS(f1_f2(E, {0, 1, 2, 3, 4, 4}), InputError);
}

TEST_CASE("property: g = 1 orbit norm of mu_1 - mu_2 is -disc")
{
    std::mt19937_64 rng(1);
    for (int it = 0; it < 100; ++it) {
        auto [f, q] = random_quadratic_weil(rng);
        Int n = galois_orbit_norm(f, q, {mono({{0, 1}}), mono({{1, 1}})});
        CHECK(n == -discriminant(f));
    }
}

TEST_CASE("property: structural relations are nonzero, bounded and stable")
{
    std::mt19937_64 rng(9);
    std::vector<std::pair<IntPoly, long>> polys{{f3(), 3}, {f5(), 5}};
    for (long q : {3L, 7L})
        polys.emplace_back(random_certified_weil(rng, 3, q), q);
    for (const auto &[f, q] : polys) {
        NormEngine E(f, q);
        auto rels = structural_relations(3, q, 3);
        CHECK(rels.size() > 10);
        std::vector<Int> vals;
        for (const auto &r : rels) {
            vals.push_back(E.norm(r));
            CHECK(vals.back() != 0);
            CHECK(log_abs(vals.back()) <= log_weil_bound(r, 3, q) + 1e-9);
        }
        // Fixed doubled precision; max_prec_used grows with every norm_at call.
        const mpfr_prec_t twice = 2 * E.max_prec_used();
        for (size_t i = 0; i < rels.size(); ++i)
            CHECK(E.norm_at(rels[i], twice) == vals[i]);
    }
}
