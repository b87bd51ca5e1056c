// SPDX-License-Identifier: Apache-2.0
#include "gic/real.hpp"

#include "gic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gic {

namespace {

constexpr mpfr_prec_t kRadPrec = 32;

mpfr_prec_t maxp(const Real &a, const Real &b) { return std::max(a.prec(), b.prec()); }

// Radius-side helpers, all rounded up.
Real up_add(const Real &a, const Real &b)
{
    Real r(kRadPrec);
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

Real up_mul(const Real &a, const Real &b)
{
    Real r(kRadPrec);
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

// Bound on the rounding error of a midpoint whose magnitude is at most m.
Real rounding_slack(const Real &m, mpfr_prec_t prec)
{
    Real r(kRadPrec);
    mpfr_mul_2si(r.get(), m.get(), -(long)prec + 2, MPFR_RNDU);
    return r;
}

} // namespace

Real::Real(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Int &v, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Real &o)
{
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real &&o) noexcept
{
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

Real &Real::operator=(const Real &o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real &Real::operator=(Real &&o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Int Real::round() const
{
    Int r;
    mpfr_get_z(r.get_mpz_t(), v_, MPFR_RNDN);
    return r;
}

Real Real::operator+(const Real &o) const
{
    Real r(maxp(*this, o));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

Real Real::operator-(const Real &o) const
{
    Real r(maxp(*this, o));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

Real Real::operator*(const Real &o) const
{
    Real r(maxp(*this, o));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

Real Real::operator/(const Real &o) const
{
    Real r(maxp(*this, o));
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

Real Real::operator-() const
{
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real abs(const Real &x)
{
    Real r(x.prec());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real &x)
{
    Real r(x.prec());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real log(const Real &x)
{
    Real r(x.prec());
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real exp(const Real &x)
{
    Real r(x.prec());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real atan2(const Real &y, const Real &x)
{
    Real r(maxp(y, x));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

Real pi(mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

Real pow2(long e, mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
    return r;
}

double log2_abs(const Real &x)
{
    if (x.is_zero())
        return -std::numeric_limits<double>::infinity();
    long e;
    double m = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDN);
    return static_cast<double>(e) + std::log2(std::fabs(m)) + 1e-9;
}

Complex Complex::operator*(const Complex &o) const
{
    return {re * o.re - im * o.im, re * o.im + im * o.re};
}

Complex Complex::operator/(const Complex &o) const
{
    Real d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

Real abs_up(const Complex &z)
{
    Real r(z.prec());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDU);
    return r;
}

Real arg(const Complex &z) { return atan2(z.im, z.re); }

Complex with_prec(const Complex &z, mpfr_prec_t prec)
{
    Complex r(prec);
    mpfr_set(r.re.get(), z.re.get(), MPFR_RNDN);
    mpfr_set(r.im.get(), z.im.get(), MPFR_RNDN);
    return r;
}

CBall::CBall(mpfr_prec_t prec) : mid(prec), rad(kRadPrec) {}

CBall::CBall(Complex m, Real r) : mid(std::move(m)), rad(kRadPrec)
{
    mpfr_set(rad.get(), r.get(), MPFR_RNDU);
}

CBall CBall::exact(const Int &v, mpfr_prec_t prec)
{
    CBall b(prec);
    mpfr_set_z(b.mid.re.get(), v.get_mpz_t(), MPFR_RNDN);
    // Integers that do not fit the mantissa get an honest radius.
    Int rounded = b.mid.re.round();
    Int err = abs(rounded - v);
    mpfr_set_z(b.rad.get(), err.get_mpz_t(), MPFR_RNDU);
    return b;
}

CBall CBall::operator+(const CBall &o) const
{
    Complex m = mid + o.mid;
    Real r = up_add(rad, o.rad);
    r = up_add(r, rounding_slack(abs_up(m), m.prec()));
    return {std::move(m), std::move(r)};
}

CBall CBall::operator-(const CBall &o) const
{
    Complex m = mid - o.mid;
    Real r = up_add(rad, o.rad);
    r = up_add(r, rounding_slack(abs_up(m), m.prec()));
    return {std::move(m), std::move(r)};
}

CBall CBall::operator*(const CBall &o) const
{
    Complex m = mid * o.mid;
    // |ab - AB| <= |A| rb + |B| ra + ra rb
    Real r = up_add(up_mul(abs_up(mid), o.rad), up_mul(abs_up(o.mid), rad));
    r = up_add(r, up_mul(rad, o.rad));
    r = up_add(r, rounding_slack(abs_up(m), m.prec()));
    return {std::move(m), std::move(r)};
}

CBall CBall::pow(unsigned long e) const
{
    CBall result = exact(1, prec());
    CBall base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

Int certified_integer(const CBall &b, double log2_tol)
{
    double lr = log2_abs(b.rad);
    if (lr >= log2_tol)
        throw PrecisionEscalation(b.prec(), "ball radius 2^" + std::to_string(lr) +
                                                " exceeds tolerance");
    // Imaginary part must be compatible with zero.
    Real im_abs = abs(b.mid.im);
    if (im_abs > b.rad && log2_abs(im_abs) >= log2_tol)
        throw InternalError("norm has a non-negligible imaginary part");
    Int n = b.mid.re.round();
    Real dist = abs(b.mid.re - Real(n, b.prec()));
    if (log2_abs(dist) >= log2_tol && !dist.is_zero())
        throw PrecisionEscalation(b.prec(), "norm is not within tolerance of an integer");
    return n;
}

} // namespace gic
