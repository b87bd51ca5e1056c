// SPDX-License-Identifier: Apache-2.0
#ifndef GIC_FINITEFIELD_HPP
#define GIC_FINITEFIELD_HPP

#include "gic/numkernel.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace gic {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);  // p prime, a != 0

/* Polynomial over F_p, constant term first, no trailing zeros. */
class FpPoly {
  public:
    FpPoly() = default;
    FpPoly(u64 p, std::vector<u64> c);
    static FpPoly reduce(const IntPoly &f, u64 p);
    static FpPoly x(u64 p) { return FpPoly(p, {0, 1}); }
    static FpPoly constant(u64 p, u64 v) { return FpPoly(p, {v % p}); }

    u64 p() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const std::vector<u64> &coeffs() const { return c_; }
    u64 coeff(int k) const { return (k < 0 || k > degree()) ? 0 : c_[k]; }
    u64 lc() const { return c_.empty() ? 0 : c_.back(); }
    u64 eval(u64 x) const;

    FpPoly operator+(const FpPoly &o) const;
    FpPoly operator-(const FpPoly &o) const;
    FpPoly operator*(const FpPoly &o) const;
    FpPoly scale(u64 s) const;
    FpPoly monic() const;
    FpPoly derivative() const;
    bool operator==(const FpPoly &o) const { return p_ == o.p_ && c_ == o.c_; }
    /* Degree first, then coefficients from the top. */
    bool operator<(const FpPoly &o) const;

    /* Lift to integers in [0, p). */
    IntPoly lift() const;
    std::string to_string() const;

  private:
    void trim();
    u64 p_ = 2;
    std::vector<u64> c_;
};

std::pair<FpPoly, FpPoly> divrem(const FpPoly &a, const FpPoly &b);
FpPoly mod(const FpPoly &a, const FpPoly &m);
FpPoly gcd(FpPoly a, FpPoly b);  // monic, or zero
FpPoly powmod(const FpPoly &base, const Int &e, const FpPoly &m);

/* Product of (factor^mult); factors monic, squarefree, pairwise coprime. */
std::vector<std::pair<FpPoly, unsigned>> squarefree_factorization(const FpPoly &f);
/* For squarefree monic f: (product of all irreducible degree-d factors, d). */
std::vector<std::pair<FpPoly, int>> distinct_degree_factorization(const FpPoly &f);
/* Splits a product of distinct degree-d irreducibles. */
std::vector<FpPoly> equal_degree_factorization(const FpPoly &f, int d, std::mt19937_64 &rng);
bool is_irreducible(const FpPoly &f);

struct Factorization {
    u64 p = 0;
    u64 unit = 0;
    std::vector<std::pair<FpPoly, unsigned>> factors;  // sorted, monic

    std::vector<int> degrees() const;  // with multiplicity, descending
    bool squarefree() const;
};

/* Full factorization of f mod p.  Fails if p divides lc(f). */
Factorization factor_mod(const IntPoly &f, u64 p, u64 seed = 0);

using FqElem = std::vector<u64>;

/* F_p[t]/(m) with m monic irreducible of degree k. */
class ExtField {
  public:
    ExtField(u64 p, FpPoly modulus);

    u64 p() const { return p_; }
    int k() const { return k_; }
    const FpPoly &modulus() const { return m_; }
    /* p^k as an exact integer. */
    Int order() const;

    FqElem zero() const { return FqElem(k_, 0); }
    FqElem one() const;
    FqElem from_u64(u64 v) const;
    FqElem from_poly(const FpPoly &a) const;
    FpPoly to_poly(const FqElem &a) const;

    FqElem add(const FqElem &a, const FqElem &b) const;
    FqElem sub(const FqElem &a, const FqElem &b) const;
    FqElem neg(const FqElem &a) const;
    FqElem mul(const FqElem &a, const FqElem &b) const;
    FqElem pow(const FqElem &a, const Int &e) const;
    FqElem inv(const FqElem &a) const;
    bool is_zero(const FqElem &a) const;

    /* 0, 1 or -1 by Euler's criterion; p odd. */
    int quad_char(const FqElem &a) const;

    /* Base-p digits; valid while p^k fits in 64 bits. */
    u64 index(const FqElem &a) const;
    FqElem element(u64 idx) const;

  private:
    u64 p_;
    int k_;
    FpPoly m_;
    std::vector<u64> tail_;  // t^k = -sum tail_[i] t^i reduction table
};

/* Seeded search for a monic irreducible of degree k. */
ExtField build_ext(u64 p, int k, u64 seed = 0);

} // namespace gic

#endif
