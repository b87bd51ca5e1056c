// SPDX-License-Identifier: Apache-2.0
// Hand-rolled generators and independent oracles shared by the test binaries.
#ifndef GIC_TESTS_SUPPORT_HPP
#define GIC_TESTS_SUPPORT_HPP

#include "gic/errors.hpp"
#include "gic/frobenius.hpp"
#include "gic/numkernel.hpp"
#include "gic/weylcert.hpp"

#include <cmath>
#include <optional>
#include <random>
#include <vector>

namespace gic::testing {

/* ln |n| without overflowing a double. */
inline double log_abs(const Int &n)
{
    long e = 0;
    double m = mpz_get_d_2exp(&e, n.get_mpz_t());
    return std::log(std::fabs(m)) + e * std::log(2.0);
}

inline Curve septic() { return make_curve(IntPoly{3, -5, -1, 5, 4, -5, -1, 1}, parse_rat("-2.511")); }

inline IntPoly f3() { return IntPoly{27, 9, 6, 2, 2, 1, 1}; }
inline IntPoly f5() { return IntPoly{125, 25, 5, 11, 1, 1, 1}; }

/* Power sums of the roots as traces of companion-matrix powers; shares no
 * code with the Newton recursion under test. */
inline std::vector<Int> power_sums(const IntPoly &f, int upto)
{
    const int d = f.degree();
    std::vector<std::vector<Int>> C(d, std::vector<Int>(d, 0));
    for (int i = 1; i < d; ++i)
        C[i][i - 1] = 1;
    for (int i = 0; i < d; ++i)
        C[i][d - 1] = -f.coeff(i);
    auto mul = [d](const std::vector<std::vector<Int>> &A, const std::vector<std::vector<Int>> &B) {
        std::vector<std::vector<Int>> R(d, std::vector<Int>(d, 0));
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k)
                if (A[i][k] != 0)
                    for (int j = 0; j < d; ++j)
                        R[i][j] += A[i][k] * B[k][j];
        return R;
    };
    std::vector<Int> s;
    auto P = C;
    for (int k = 1; k <= upto; ++k) {
        Int t = 0;
        for (int i = 0; i < d; ++i)
            t += P[i][i];
        s.push_back(t);
        P = mul(P, C);
    }
    return s;
}

/* #C(F_{q^k}) = q^k + 1 - s_k. */
inline std::vector<Int> counts_from_charpoly(const IntPoly &f, const Int &q, int upto)
{
    auto s = power_sums(f, upto);
    std::vector<Int> n;
    for (int k = 1; k <= upto; ++k)
        n.push_back(int_pow(q, k) + 1 - s[k - 1]);
    return n;
}

/* Real Weil polynomial with g real roots drawn in (-2 sqrt q, 2 sqrt q) and
 * rounded; rejected unless the lift is squarefree with all roots on the
 * circle |z| = sqrt q. */
inline std::optional<IntPoly> random_weil(std::mt19937_64 &rng, int g, long q)
{
    const double r = 2 * std::sqrt(static_cast<double>(q));
    std::uniform_real_distribution<double> t(-r, r);
    std::vector<double> h{1.0};
    for (int i = 0; i < g; ++i) {
        double root = t(rng);
        std::vector<double> n(h.size() + 1, 0.0);
        for (size_t j = 0; j < h.size(); ++j) {
            n[j + 1] += h[j];
            n[j] -= root * h[j];
        }
        h = n;
    }
    std::vector<Int> hc;
    for (double c : h)
        hc.push_back(Int(static_cast<long>(std::llround(c))));
    IntPoly f = weil_from_real(IntPoly(hc), Int(q));
    if (discriminant(f) == 0 || !validate_weil(f, Int(q)))
        return std::nullopt;
    return f;
}

/* Random Weil polynomial whose Galois group is certified to be W_g. */
inline IntPoly random_certified_weil(std::mt19937_64 &rng, int g, long q, u64 bound = 3000)
{
    for (;;) {
        auto f = random_weil(rng, g, q);
        if (!f)
            continue;
        try {
            if (certify_weyl(*f, Int(q), bound).certified)
                return *f;
        } catch (const InputError &) {
        }
    }
}

/* x^2 - a x + q with a^2 < 4q, q a prime below 200. */
inline std::pair<IntPoly, Int> random_quadratic_weil(std::mt19937_64 &rng)
{
    static const std::vector<unsigned long> ps = primes_up_to(200);
    unsigned long q = ps[rng() % ps.size()];
    long amax = static_cast<long>(std::floor(2 * std::sqrt(static_cast<double>(q))));
    if (static_cast<unsigned long>(amax * amax) == 4 * q)
        --amax;
    long a = static_cast<long>(rng() % (2 * amax + 1)) - amax;
    return {IntPoly{static_cast<long>(q), -a, 1}, Int(q)};
}

} // namespace gic::testing

#endif
