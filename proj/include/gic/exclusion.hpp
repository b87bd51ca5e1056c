// SPDX-License-Identifier: Apache-2.0
#ifndef GIC_EXCLUSION_HPP
#define GIC_EXCLUSION_HPP

#include "gic/numkernel.hpp"
#include "gic/roots.hpp"
#include "gic/weylcert.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gic {

/* coeff * prod mu_label^exp; factors sorted by label, exponents positive. */
struct Monomial {
    Int coeff = 1;
    std::vector<std::pair<int, unsigned>> factors;

    unsigned degree() const;
    bool operator<(const Monomial &o) const;
    bool operator==(const Monomial &o) const;
};

Monomial mono(std::vector<std::pair<int, unsigned>> factors, Int coeff = 1);

/* The quantity lhs - rhs evaluated at labeled roots. */
struct Relation {
    Monomial lhs, rhs;

    std::string to_string() const;
};

Relation apply(const SignedPerm &s, const Relation &r);

/* Orbit-canonical key: invariant under W_g and under swapping the sides, both
 * of which leave the orbit norm unchanged. */
std::string canonical_key(const Relation &r, const std::vector<SignedPerm> &W);

/* True iff lhs = rhs holds for every root system with mu_i mu_pair(i) = q and
 * otherwise free roots, i.e. the relation is empty information. */
bool identically_zero(const Relation &r, int g, const Int &q);

/* ln of (|c_l| q^{deg_l/2} + |c_r| q^{deg_r/2})^{|W_g|}. */
double log_weil_bound(const Relation &r, int g, const Int &q);

/* Norms prod_{w in W_g} r(w mu) for one Weil polynomial.  Precision starts at
 * bits(Weil bound) + guard, or at start_prec when that is nonzero, and doubles
 * on failure up to kPrecisionCap. */
class NormEngine {
  public:
    NormEngine(IntPoly f, Int q, mpfr_prec_t start_prec = 0, long guard_bits = 96);

    const IntPoly &f() const { return f_; }
    const Int &q() const { return q_; }
    int g() const { return g_; }
    const std::vector<SignedPerm> &W() const { return W_; }

    Int norm(const Relation &r);
    /* Same computation at an explicit precision, no escalation and no cache. */
    Int norm_at(const Relation &r, mpfr_prec_t prec);
    const RootLabeling &labeling(mpfr_prec_t prec);

    size_t cache_size() const { return cache_.size(); }
    mpfr_prec_t max_prec_used() const { return max_prec_; }

  private:
    IntPoly f_;
    Int q_;
    int g_;
    mpfr_prec_t start_;
    long guard_;
    std::vector<SignedPerm> W_;
    std::map<mpfr_prec_t, RootLabeling> labelings_;
    std::map<std::string, Int> cache_;
    mpfr_prec_t max_prec_ = 0;
};

/* One representative per W_g orbit of: mu_b^2 - mu_a mu_c and
 * mu_a mu_b - mu_c mu_d on distinct labels, and prod_{i<=n} mu^N -
 * prod_{i>n} mu^N for odd n <= g, 1 <= N <= maxN.  Identities are dropped. */
std::vector<Relation> structural_relations(int g, const Int &q, unsigned maxN);

/* Single-shot convenience wrapper. */
Int galois_orbit_norm(const IntPoly &f, const Int &q, const Relation &r);

struct NormRecord {
    std::string relation;
    Int value;
    double log_bound;  // natural log of the Weil bound for |value|
};

struct ExclusionReport {
    std::string kind;
    double threshold_ln = 0;
    std::vector<std::string> generators;
    std::vector<NormRecord> norms;
    std::vector<Int> gcds;  // distinct per-assignment gcds (tensor case)
    std::set<Int> small_primes;
    std::set<Int> cofactors;  // unfactored parts above the trial bound
    size_t unconstrained = 0;  // assignments whose relations all vanished
    bool vacuous = false;
    std::vector<std::string> notes;

    /* All recorded norms are nonzero and within their Weil bounds. */
    bool bounds_hold() const;
};

/* Binomials cutting out the tensor-product locus for V = W1 (x) W2 with
 * dim W1 = 2m, dim W2 = n odd, on variables z_i, x_ij, y_ij. */
struct TensorLocus {
    int m = 1, n = 3;
    std::vector<std::string> variables;
    std::vector<std::pair<Monomial, Monomial>> binomials;  // over variable slots
};
TensorLocus tensor_locus(int m, int n);

ExclusionReport tensor_exclusion(NormEngine &E, int m, int n, unsigned long trial_bound);
ExclusionReport lie_exclusion(NormEngine &E, unsigned long trial_bound);
ExclusionReport minuscule_exclusion(NormEngine &E, int n, unsigned N, unsigned long trial_bound);
ExclusionReport induced_exclusion(NormEngine &E, unsigned long trial_bound);

/* f1 = |N(x1x3 - x2x4)| + |N(x1x6 - x2x5)| and f2 = |N(x2^2 - x1x3)| for six
 * distinct labels x1..x6. */
struct F1F2 {
    Int f1, f2;
    double log_bound_f1, log_bound_f2;
};
F1F2 f1_f2(NormEngine &E, const std::vector<int> &labels);

} // namespace gic

#endif
