// SPDX-License-Identifier: Apache-2.0
#ifndef GIC_NUMKERNEL_HPP
#define GIC_NUMKERNEL_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace gic {

using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int &num, const Int &den);
Rat parse_rat(const std::string &s);  // "p/q", "-2.511", "7"

/* Dense integer polynomial, constant term first.  No trailing zeros, so the
 * zero polynomial has an empty coefficient vector and degree -1. */
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> c);
    IntPoly(std::initializer_list<long> c);

    static IntPoly monomial(const Int &c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int> &coeffs() const { return c_; }
    Int coeff(int k) const;
    Int lc() const;
    Int eval(const Int &x) const;

    IntPoly derivative() const;
    IntPoly operator+(const IntPoly &o) const;
    IntPoly operator-(const IntPoly &o) const;
    IntPoly operator*(const IntPoly &o) const;
    IntPoly operator*(const Int &s) const;
    bool operator==(const IntPoly &o) const { return c_ == o.c_; }

    /* x^k f(q/x) style substitution helper: coefficients scaled by q^j. */
    std::string to_string() const;

  private:
    void trim();
    std::vector<Int> c_;
};

/* Determinant of a square integer matrix, fraction free. */
Int bareiss_det(std::vector<std::vector<Int>> m);

/* lc(f)^deg g * prod_{f(a)=0} g(a).  Zero if they share a root. */
Int resultant(const IntPoly &f, const IntPoly &g);

/* (-1)^{d(d-1)/2} Res(f, f') / lc(f). */
Int discriminant(const IntPoly &f);

/* x^d phi(q/x) / phi(0).  Throws InputError if phi(0) = 0 or the division is
 * not exact over Z. */
IntPoly reciprocal_transform(const IntPoly &phi, const Int &q);

/* x^{2g} f(q/x) == q^g f(x) for deg f = 2g. */
bool has_weil_symmetry(const IntPoly &f, const Int &q);

/* h of degree g with f(x) = x^g h(x + q/x). */
IntPoly real_weil_poly(const IntPoly &f, const Int &q);

/* Inverse of real_weil_poly. */
IntPoly weil_from_real(const IntPoly &h, const Int &q);

Int int_pow(const Int &b, unsigned long e);
bool is_perfect_square(const Int &n);

/* Prime factors found by trial division up to bound; the leftover cofactor is
 * returned separately (1 if fully factored). */
struct TrialFactorization {
    std::vector<std::pair<Int, unsigned>> factors;
    Int cofactor;
};
TrialFactorization trial_factor(const Int &n, unsigned long bound);

std::vector<unsigned long> primes_up_to(unsigned long n);
bool is_prime_ul(unsigned long n);

/* Decimal string for |n| >= 2^53, plain integer otherwise; used in reports. */
bool fits_json_integer(const Int &n);

} // namespace gic

#endif
