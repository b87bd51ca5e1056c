// SPDX-License-Identifier: Apache-2.0
#include "gic/bounds.hpp"
#include "gic/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace gic;

namespace {

// ln b(d, g, h) straight from the definition, in long double.
long double ln_b_ref(long double ln_d, int g, long double h)
{
    long double m = std::max({h, ln_d, 1.0L});
    return 1024.0L * g * g * g * (64.0L * g * g * std::log(14.0L * g) + ln_d + 2 * std::log(m));
}

} // namespace

TEST_CASE("main bound for g = 3 over Q")
{
    MainBound b = main_bound({1, 3, Rat(-2511, 1000), 3});
    const long double h = -2.511L;
    CHECK(b.term1.ln == doctest::Approx(48 * (std::log(2.0) + 4 * (std::sqrt(18.0) + 1) * std::log(3.0))));
    CHECK(b.term2.ln == doctest::Approx(static_cast<double>(ln_b_ref(std::log(6.0L), 3, h))));
    REQUIRE(b.term3);
    CHECK(b.term3->ln == doctest::Approx(static_cast<double>(ln_b_ref(std::log(3.0L), 6, 2 * h) / 6)));
    // Frozen values.
    CHECK(b.term1.ln == doctest::Approx(1139.12).epsilon(1e-5));
    CHECK(b.term2.ln == doctest::Approx(5.96051e7).epsilon(1e-5));
    CHECK(b.term3->ln == doctest::Approx(3.76377e8).epsilon(1e-5));
    CHECK(b.dominant == 3);
    CHECK(b.value.ln >= 3.70e8);
    CHECK(b.value.ln <= 3.80e8);
    CHECK(b.value.radius < 1e-3);
    CHECK(b.value.to_string() == "exp(3.763773e+08)");
}

TEST_CASE("main bound drops the third term from g = 19")
{
    CHECK_FALSE(main_bound({1, 19, Rat(1), 3}).term3);
    CHECK(main_bound({1, 18, Rat(1), 3}).term3);
    CHECK_THROWS_AS(main_bound({0, 3, Rat(1), 3}), InputError);
}

TEST_CASE("b-function helpers")
{
    CHECK(b_of_variety(2, 3, Rat(1), 6).ln == doctest::Approx(b_function(12, 3, Rat(1)).ln));
    CHECK(log_b(std::log(12.0), 3, Rat(1)).ln == doctest::Approx(b_function(12, 3, Rat(1)).ln));
    CHECK_THROWS_AS(b_function(0, 3, Rat(1)), InputError);
    // h dominates once it exceeds ln d and 1.
    CHECK(b_function(2, 1, Rat(100)).ln == doctest::Approx(static_cast<double>(ln_b_ref(std::log(2.0L), 1, 100))));
}

TEST_CASE("Collins J(n)")
{
    CHECK(J_exact(3) == 81 * 120);
    CHECK(log_J(3) == doctest::Approx(std::log(9720.0)));
    CHECK(log_J(70) == doctest::Approx(4 * std::log(70.0) + std::lgamma(73.0)));
    CHECK(log_J(71) == doctest::Approx(std::lgamma(73.0)));
    Int f72;
    mpz_fac_ui(f72.get_mpz_t(), 72);
    CHECK(J_exact(71) == f72);
    CHECK_THROWS_AS(log_J(0), InputError);
}

TEST_CASE("Landau function and its upper bound")
{
    CHECK(landau(0) == 1);
    CHECK(landau(7) == 12);
    CHECK(landau(10) == 30);
    CHECK(landau(19) == 420);
    // The real bound dips just under xi(3) = 3; the integer ceiling never does.
    CHECK(xi_bound(3) < 3);
    for (int n = 3; n <= 80; ++n)
        CHECK(std::ceil(xi_bound(n)) >= landau(n).get_d());
    for (int n = 4; n <= 80; ++n)
        CHECK(xi_bound(n) >= landau(n).get_d());
    CHECK_THROWS_AS(xi_bound(2), InputError);
}

TEST_CASE("Chebotarev constant over Q")
{
    Chebotarev c = chebotarev_B(0, 1, {2, 3}, 2);
    CHECK(c.ln_delta_star == doctest::Approx(std::log(24.0)));
    CHECK(c.B == doctest::Approx(70 * std::pow(std::log(24.0), 2)));
    CHECK(c.B == doctest::Approx(707.0018).epsilon(1e-6));
    CHECK_THROWS_AS(chebotarev_B(0, 1, {4}, 2), InputError);
}

TEST_CASE("threefold bounds")
{
    LogBound grh = threefold_bound(1, Rat(-2511, 1000), 0, 21.45, true);
    CHECK(std::isfinite(grh.ln));
    CHECK_FALSE(grh.ln_ln);
    LogBound b = b_function(3, 6, Rat(-2 * 2511, 1000));
    CHECK(grh.ln == doctest::Approx(48 * (std::log(2.0) + 8 * b.ln + 2 * std::log(21.45))));
    LogBound un = threefold_bound(1, Rat(-2511, 1000), 0, 21.45, false);
    REQUIRE(un.ln_ln);
    CHECK(*un.ln_ln == doctest::Approx(std::log(48.0) + std::log(kUnconditionalChebotarevC) + 8 * b.ln +
                                       2 * std::log(21.45)));
    LogBound un2 = threefold_bound(1, Rat(-2511, 1000), 0, 21.45, false, 1.0);
    CHECK(*un2.ln_ln < *un.ln_ln);
    CHECK_THROWS_AS(threefold_bound(1, Rat(1), 0, 0.1, true), InputError);
}

TEST_CASE("easy thresholds")
{
    CHECK(semistable_psl2_threshold(3) == 13);
    LogBound c = constant_group_threshold(1, 3, Rat(1));
    CHECK(c.ln == doctest::Approx(log_b(log_J(6), 3, Rat(1)).ln / 5));
}
