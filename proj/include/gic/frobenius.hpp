// SPDX-License-Identifier: Apache-2.0
#ifndef GIC_FROBENIUS_HPP
#define GIC_FROBENIUS_HPP

#include "gic/finitefield.hpp"
#include "gic/numkernel.hpp"

#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

namespace gic {

/* y^2 = model(x), deg model = 2g+1 or 2g+2. */
struct Curve {
    int genus = 0;
    IntPoly model;
    std::optional<Rat> height;
};

/* "genus g" / "coeffs c0 ... cn" / optional "height r"; '#' starts a comment. */
Curve parse_curve(const std::string &text);
Curve load_curve(const std::string &path);
Curve make_curve(const IntPoly &model, std::optional<Rat> height = std::nullopt);

/* Throws BadReduction unless p is an odd good prime for the model. */
void check_good_reduction(const IntPoly &model, u64 p);

/* #C(F_{p^k}) for k = 1..upto, by direct enumeration of F_{p^k}. */
std::vector<Int> count_points(const IntPoly &model, u64 p, int upto, u64 seed = 0);

/* Weil polynomial from #C(F_{q^k}), k = 1..g, via Newton's identities and the
 * functional equation. */
IntPoly charpoly_from_counts(const std::vector<Int> &counts, const Int &q, int g);

IntPoly frobenius_charpoly(const Curve &c, u64 p, u64 seed = 0);

/* Every complex root has absolute value sqrt(q) and f has the functional
 * equation.  f must be squarefree. */
bool validate_weil(const IntPoly &f, const Int &q, mpfr_prec_t prec = 128);

} // namespace gic

#endif
