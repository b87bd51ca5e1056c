// SPDX-License-Identifier: Apache-2.0
#ifndef GIC_REAL_HPP
#define GIC_REAL_HPP

#include "gic/numkernel.hpp"

#include <mpfr.h>

#include <string>

namespace gic {

/* Owning wrapper over mpfr_t.  Arithmetic rounds to nearest at the larger of
 * the operand precisions unless a helper says otherwise. */
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 128);
    Real(long v, mpfr_prec_t prec);
    Real(const Int &v, mpfr_prec_t prec);
    Real(const Real &o);
    Real(Real &&o) noexcept;
    Real &operator=(const Real &o);
    Real &operator=(Real &&o) noexcept;
    ~Real();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /* Nearest integer. */
    Int round() const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    Real operator+(const Real &o) const;
    Real operator-(const Real &o) const;
    Real operator*(const Real &o) const;
    Real operator/(const Real &o) const;
    Real operator-() const;
    bool operator<(const Real &o) const { return mpfr_less_p(v_, o.v_) != 0; }
    bool operator>(const Real &o) const { return mpfr_greater_p(v_, o.v_) != 0; }

  private:
    mpfr_t v_;
};

Real abs(const Real &x);
Real sqrt(const Real &x);
Real log(const Real &x);
Real exp(const Real &x);
Real atan2(const Real &y, const Real &x);
Real pi(mpfr_prec_t prec);
/* 2^e at the given precision. */
Real pow2(long e, mpfr_prec_t prec);
/* Upper bound on log2|x|; -inf for zero. */
double log2_abs(const Real &x);

struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t prec() const { return re.prec(); }
    Complex operator+(const Complex &o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex &o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex &o) const;
    Complex operator/(const Complex &o) const;
    Complex operator-() const { return {-re, -im}; }
};

/* |z|, rounded up. */
Real abs_up(const Complex &z);
Real arg(const Complex &z);
Complex with_prec(const Complex &z, mpfr_prec_t prec);

/* Complex ball: every point within rad of mid.  rad is kept at low precision
 * and only ever rounded upward. */
struct CBall {
    Complex mid;
    Real rad;

    explicit CBall(mpfr_prec_t prec = 128);
    CBall(Complex m, Real r);
    static CBall exact(const Int &v, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mid.prec(); }
    CBall operator+(const CBall &o) const;
    CBall operator-(const CBall &o) const;
    CBall operator*(const CBall &o) const;
    CBall pow(unsigned long e) const;
};

/* Unique integer in b, provided b.im contains 0 and the real interval has
 * width below tol.  Throws PrecisionEscalation otherwise. */
Int certified_integer(const CBall &b, double log2_tol);

} // namespace gic

#endif
