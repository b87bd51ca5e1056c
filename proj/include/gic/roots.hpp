// SPDX-License-Identifier: Apache-2.0
#ifndef GIC_ROOTS_HPP
#define GIC_ROOTS_HPP

#include "gic/numkernel.hpp"
#include "gic/real.hpp"

#include <functional>
#include <vector>

namespace gic {

/* Isolating balls for all roots of a squarefree polynomial.  Disks are
 * pairwise disjoint, so each holds exactly one root. */
std::vector<CBall> complex_roots(const IntPoly &f, mpfr_prec_t prec);

/* Roots of a degree 2g Weil polynomial, ordered by argument so that
 * root i and root pair(i) = 2g-1-i multiply to q. */
struct RootLabeling {
    IntPoly f;
    Int q;
    int g = 0;
    std::vector<CBall> roots;

    int pair(int i) const { return 2 * g - 1 - i; }
    mpfr_prec_t prec() const { return roots.empty() ? 0 : roots[0].prec(); }
};

RootLabeling label_roots(const IntPoly &f, const Int &q, mpfr_prec_t prec);

/* Largest precision the escalation loop may request. */
constexpr mpfr_prec_t kPrecisionCap = mpfr_prec_t(1) << 16;

/* Observer for precision doublings; the CLI routes it to stderr. */
using EscalationHook = std::function<void(mpfr_prec_t from, mpfr_prec_t to, const char *why)>;
void set_escalation_hook(EscalationHook hook);
void notify_escalation(mpfr_prec_t from, mpfr_prec_t to, const char *why);

} // namespace gic

#endif
