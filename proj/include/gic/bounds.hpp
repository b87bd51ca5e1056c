// SPDX-License-Identifier: Apache-2.0
#ifndef GIC_BOUNDS_HPP
#define GIC_BOUNDS_HPP

#include "gic/numkernel.hpp"

#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

namespace gic {

/* A positive quantity X stored as ln X.  For values beyond double range in
 * the exponent, ln X is +inf and ln ln X carries the information. */
struct LogBound {
    double ln = 0;
    double radius = 0;  // absolute error bound on ln (or on ln_ln)
    std::optional<double> ln_ln;
    std::string tag;

    /* "exp(3.7638e+08)" or "exp(exp(...))". */
    std::string to_string() const;
};

constexpr mpfr_prec_t kBoundsPrec = 128;

/* ln b(d, g, h) = 1024 g^3 (64 g^2 ln(14g) + ln d + 2 ln max(h, ln d, 1)).
 * The degree is passed as ln d so that huge degrees stay representable. */
LogBound log_b(double ln_deg, int g, const Rat &h, mpfr_prec_t prec = kBoundsPrec);
LogBound b_function(const Int &deg, int g, const Rat &h, mpfr_prec_t prec = kBoundsPrec);
/* b(A/K; d) = b(d [K:Q], g, h). */
LogBound b_of_variety(long degK, int g, const Rat &h, long d, mpfr_prec_t prec = kBoundsPrec);

struct MainBoundInputs {
    long degK = 1;
    int g = 3;
    Rat h;
    Int qv = 3;
};

struct MainBound {
    LogBound term1, term2;
    std::optional<LogBound> term3;  // absent for g >= 19
    LogBound value;
    int dominant = 0;  // 1, 2 or 3
};

MainBound main_bound(const MainBoundInputs &in, mpfr_prec_t prec = kBoundsPrec);

/* ln J(n): (n+1)! for n >= 71, else n^4 (n+2)!. */
double log_J(int n);
Int J_exact(int n);

/* Upper bound for the largest element order in S_n (n >= 3). */
double xi_bound(int n);
/* Exact largest element order in S_n (Landau's function), by partitions. */
Int landau(int n);

struct Chebotarev {
    double ln_delta_star = 0;
    double B = 0;
};

/* Delta* = |Delta_K|^N (N prod_{p in S} p^{1-1/N})^{N [K:Q]},  B = 70 (ln Delta*)^2. */
Chebotarev chebotarev_B(double log_abs_disc, long degK, const std::vector<unsigned long> &S, long N);

/* (2q)^48 with q = b(A^2/K; 3)^8 (logDisc + logN)^2 under GRH, or
 * q = exp(c b^8 (logDisc + logN)^2) unconditionally. */
constexpr double kUnconditionalChebotarevC = 27175010.0;
LogBound threefold_bound(long degK, const Rat &h, double log_disc, double log_N, bool grh,
                         double c = kUnconditionalChebotarevC, mpfr_prec_t prec = kBoundsPrec);

/* Semistable reduction at two places forces PSL_2 images only below this. */
long semistable_psl2_threshold(int g);

/* ln b([K:Q] J(2g), g, h) / (2g - 1). */
LogBound constant_group_threshold(long degK, int g, const Rat &h, mpfr_prec_t prec = kBoundsPrec);

} // namespace gic

#endif
