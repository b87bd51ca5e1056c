// SPDX-License-Identifier: Apache-2.0
#ifndef GIC_WEYLCERT_HPP
#define GIC_WEYLCERT_HPP

#include "gic/finitefield.hpp"
#include "gic/numkernel.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace gic {

/* Element of W_g = (Z/2)^g x| S_g acting on root labels 0..2g-1, where label
 * i and label 2g-1-i form the i-th pair.  Pair k goes to pair perm[k]; if
 * flip[k] the two members are exchanged on the way. */
struct SignedPerm {
    std::vector<int> perm;
    std::vector<char> flip;

    int g() const { return static_cast<int>(perm.size()); }
    int act(int label) const;
};

/* All 2^g g! elements in a fixed order; the identity comes first. */
std::vector<SignedPerm> weyl_group(int g);

/* Conjugacy class of W_g: cycle lengths on pairs, split by whether the cycle
 * carries an even (positive) or odd (negative) number of flips.  Both lists
 * are sorted in decreasing order. */
struct SignedClass {
    std::vector<int> pos, neg;

    bool operator<(const SignedClass &o) const
    {
        return std::tie(pos, neg) < std::tie(o.pos, o.neg);
    }
    bool operator==(const SignedClass &o) const { return pos == o.pos && neg == o.neg; }
    std::string to_string() const;  // "[2,1|]" style
};

std::vector<SignedClass> weyl_classes(int g);
SignedClass class_of(const SignedPerm &s);

/* Class of Frobenius at p, read off the factorization of f mod p with factors
 * paired under phi -> phi*.  Needs p odd, p not dividing q disc(f), and no
 * root with mu^2 = q mod p. */
SignedClass signed_cycle_type(const IntPoly &f, const Int &q, u64 p, u64 seed = 0);

/* Why a prime was unusable for the scan. */
std::optional<std::string> scan_obstruction(const IntPoly &f, const Int &q, u64 p);

struct WeylCertificate {
    bool certified = false;
    std::optional<u64> irreducible_witness;
    std::map<SignedClass, u64> witnesses;  // first prime hitting each class
    std::vector<SignedClass> missing;
    std::vector<u64> skipped;
    u64 prime_bound = 0;
};

/* Gal(f) = W_g once every class of W_g is hit (Jordan); stops at the first
 * prime completing the coverage. */
WeylCertificate certify_weyl(const IntPoly &f, const Int &q, u64 prime_bound, u64 seed = 0);

struct A7Certificate {
    bool certified = false;
    bool square_discriminant = false;
    Int discriminant;
    std::optional<u64> irreducible_witness;
    std::optional<u64> five_cycle_witness;  // degrees (5,1,1)
};

/* Irreducible degree 7, square discriminant and a 5-cycle give A_7. */
A7Certificate certify_A7(const IntPoly &f, u64 prime_bound, u64 seed = 0);

} // namespace gic

#endif
