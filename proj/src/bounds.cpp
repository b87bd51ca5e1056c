// SPDX-License-Identifier: Apache-2.0
#include "gic/bounds.hpp"

#include "gic/errors.hpp"
#include "gic/real.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

namespace gic {

namespace {

Real from_rat(const Rat &r, mpfr_prec_t p)
{
    Real x(p);
    mpfr_set_q(x.get(), r.get_mpq_t(), MPFR_RNDN);
    return x;
}

Real from_double(double d, mpfr_prec_t p)
{
    Real x(p);
    mpfr_set_d(x.get(), d, MPFR_RNDN);
    return x;
}

// Evaluate at p and p + 64 bits; the spread plus a double ulp is the radius.
LogBound stable(const std::function<Real(mpfr_prec_t)> &f, mpfr_prec_t p, const std::string &tag)
{
    Real a = f(p), b = f(p + 64);
    LogBound out;
    out.ln = b.to_double();
    out.radius = std::fabs((a - b).to_double()) + std::fabs(out.ln) * 0x1p-50;
    out.tag = tag;
    return out;
}

Real ln_b(const Real &ln_deg, int g, const Rat &h, mpfr_prec_t p)
{
    Real alpha(1024L * g * g * g, p);
    Real fourteen_g(14L * g, p);
    Real hh = from_rat(h, p);
    Real m = ln_deg;
    if (hh > m)
        m = hh;
    Real one(1L, p);
    if (one > m)
        m = one;
    Real inner = Real(64L * g * g, p) * log(fourteen_g) + ln_deg + Real(2L, p) * log(m);
    return alpha * inner;
}

Int factorial(int n)
{
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace

std::string LogBound::to_string() const
{
    char buf[64];
    if (ln_ln)
        std::snprintf(buf, sizeof buf, "exp(exp(%.6e))", *ln_ln);
    else
        std::snprintf(buf, sizeof buf, "exp(%.6e)", ln);
    return buf;
}

LogBound log_b(double ln_deg, int g, const Rat &h, mpfr_prec_t prec)
{
    if (g < 1)
        throw InputError("b-function needs g >= 1");
    if (ln_deg < 0)
        throw InputError("b-function needs degree >= 1");
    return stable([&](mpfr_prec_t p) { return ln_b(from_double(ln_deg, p), g, h, p); }, prec,
                  "b");
}

LogBound b_function(const Int &deg, int g, const Rat &h, mpfr_prec_t prec)
{
    if (deg < 1)
        throw InputError("b-function needs degree >= 1");
    return stable([&](mpfr_prec_t p) { return ln_b(log(Real(deg, p)), g, h, p); }, prec, "b");
}

LogBound b_of_variety(long degK, int g, const Rat &h, long d, mpfr_prec_t prec)
{
    return b_function(Int(d) * degK, g, h, prec);
}

MainBound main_bound(const MainBoundInputs &in, mpfr_prec_t prec)
{
    if (in.degK < 1 || in.g < 1 || in.qv < 2)
        throw InputError("main_bound: need [K:Q] >= 1, g >= 1, q_v >= 2");
    const int g = in.g;
    MainBound out;
    out.term1 = stable(
        [&](mpfr_prec_t p) {
            Real order(int_pow(Int(2), g) * factorial(g), p);
            Real e = Real(4L, p) * (sqrt(Real(6L * g, p)) + Real(1L, p));
            return order * (log(Real(2L, p)) + e * log(Real(in.qv, p)));
        },
        prec, "residue-field term");
    out.term2 = b_function(factorial(g) * in.degK, g, in.h, prec);
    out.term2.tag = "b(A/K; g!)";
    if (g < 19) {
        // b(A^2/K; g)^{1/2g} with h(A^2) = 2 h(A).
        LogBound t = b_function(Int(g) * in.degK, 2 * g, Rat(2 * in.h), prec);
        t.ln /= 2 * g;
        t.radius /= 2 * g;
        t.tag = "b(A^2/K; g)^(1/2g)";
        out.term3 = t;
    }
    out.value = out.term1;
    out.dominant = 1;
    if (out.term2.ln > out.value.ln) {
        out.value = out.term2;
        out.dominant = 2;
    }
    if (out.term3 && out.term3->ln > out.value.ln) {
        out.value = *out.term3;
        out.dominant = 3;
    }
    return out;
}

double log_J(int n)
{
    if (n < 1)
        throw InputError("J(n) needs n >= 1");
    if (n >= 71)
        return std::lgamma(n + 2.0);
    return 4 * std::log(static_cast<double>(n)) + std::lgamma(n + 3.0);
}

Int J_exact(int n)
{
    if (n < 1)
        throw InputError("J(n) needs n >= 1");
    Int f;
    if (n >= 71) {
        mpz_fac_ui(f.get_mpz_t(), n + 1);
        return f;
    }
    mpz_fac_ui(f.get_mpz_t(), n + 2);
    return int_pow(Int(n), 4) * f;
}

double xi_bound(int n)
{
    if (n < 3)
        throw InputError("xi_bound needs n >= 3");
    const double ln = std::log(static_cast<double>(n));
    return std::exp(std::sqrt(n * ln) * (1 + (std::log(ln) - 0.975) / (2 * ln)));
}

Int landau(int n)
{
    if (n < 0)
        throw InputError("landau needs n >= 0");
    // best[k] = largest lcm of a partition of k into parts up to the current prime power.
    std::vector<Int> best(n + 1, 1);
    for (unsigned long p : primes_up_to(n)) {
        std::vector<Int> next = best;
        for (unsigned long pk = p; pk <= static_cast<unsigned long>(n); pk *= p)
            for (int k = n; k >= static_cast<int>(pk); --k)
                if (best[k - pk] * pk > next[k])
                    next[k] = best[k - pk] * pk;
        best = std::move(next);
    }
    Int m = 1;
    for (const auto &v : best)
        if (v > m)
            m = v;
    return m;
}

Chebotarev chebotarev_B(double log_abs_disc, long degK, const std::vector<unsigned long> &S, long N)
{
    if (degK < 1 || N < 1 || log_abs_disc < 0)
        throw InputError("chebotarev_B: bad arguments");
    double sum = 0;
    for (unsigned long p : S) {
        if (!is_prime_ul(p))
            throw InputError("chebotarev_B: S must consist of primes");
        sum += std::log(static_cast<double>(p));
    }
    Chebotarev out;
    out.ln_delta_star = N * log_abs_disc +
                        N * static_cast<double>(degK) * (std::log(static_cast<double>(N)) +
                                                         (1 - 1.0 / N) * sum);
    out.B = 70 * out.ln_delta_star * out.ln_delta_star;
    return out;
}

LogBound threefold_bound(long degK, const Rat &h, double log_disc, double log_N, bool grh, double c,
                         mpfr_prec_t prec)
{
    const double s = log_disc + log_N;
    if (!(c > 0))
        throw InputError("threefold_bound: constant must be positive");
    if (!(s >= std::log(2.0)))
        throw InputError("threefold_bound: log|Delta| + log N must be at least ln 2");
    LogBound b = b_function(Int(3) * degK, 6, Rat(2 * h), prec);
    LogBound out;
    if (grh) {
        double ln_q = 8 * b.ln + 2 * std::log(s);
        out.ln = 48 * (std::log(2.0) + ln_q);
        out.radius = 48 * 8 * b.radius + std::fabs(out.ln) * 0x1p-50;
        out.tag = "threefold (GRH)";
    } else {
        // ln q = c b^8 s^2 overflows; keep ln ln.
        double lnln_q = std::log(c) + 8 * b.ln + 2 * std::log(s);
        out.ln = INFINITY;
        out.ln_ln = std::log(48.0) + lnln_q;
        out.radius = 8 * b.radius + std::fabs(*out.ln_ln) * 0x1p-50;
        out.tag = "threefold (unconditional)";
    }
    return out;
}

long semistable_psl2_threshold(int g)
{
    if (g < 1)
        throw InputError("semistable threshold needs g >= 1");
    return 2L * g * (g - 1) + 1;
}

LogBound constant_group_threshold(long degK, int g, const Rat &h, mpfr_prec_t prec)
{
    if (degK < 1 || g < 1)
        throw InputError("constant_group_threshold: bad arguments");
    LogBound b = log_b(std::log(static_cast<double>(degK)) + log_J(2 * g), g, h, prec);
    b.ln /= (2 * g - 1);
    b.radius /= (2 * g - 1);
    b.tag = "constant group";
    return b;
}

} // namespace gic
