// SPDX-License-Identifier: Apache-2.0
#include "gic/roots.hpp"

#include "gic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gic {

namespace {

EscalationHook &hook_slot()
{
    static EscalationHook h;
    return h;
}

struct Evaluation {
    Complex value;
    Complex deriv;
    Real err;  // bound on the rounding error in value
};

Evaluation horner(const std::vector<Real> &c, const Complex &z)
{
    const mpfr_prec_t p = z.prec();
    Complex v(p), d(p);
    Real zabs = abs_up(z);
    Real acc(p);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d = d * z + v;
        v = v * z;
        v.re = v.re + *it;
        acc = acc * zabs + abs(*it);
    }
    // Horner with n steps loses at most ~4n ulps of sum |c_k| |z|^k.
    Real err = acc * pow2(-(long)p + 4 + (long)std::ceil(std::log2(c.size() + 1.0)), p);
    return {std::move(v), std::move(d), std::move(err)};
}

std::vector<Real> to_reals(const IntPoly &f, mpfr_prec_t p)
{
    std::vector<Real> c;
    for (const auto &v : f.coeffs())
        c.emplace_back(v, p);
    return c;
}

// One Aberth sweep; returns log2 of the largest relative correction.
double aberth_step(const std::vector<Real> &c, std::vector<Complex> &z)
{
    const size_t n = z.size();
    const mpfr_prec_t p = z[0].prec();
    double worst = -1e300;
    for (size_t k = 0; k < n; ++k) {
        Evaluation e = horner(c, z[k]);
        if (e.value.re.is_zero() && e.value.im.is_zero())
            continue;
        Complex w = e.value / e.deriv;
        Complex s(p);
        for (size_t j = 0; j < n; ++j) {
            if (j == k)
                continue;
            Complex one(Real(1L, p), Real(p));
            s = s + one / (z[k] - z[j]);
        }
        Complex one(Real(1L, p), Real(p));
        Complex a = w / (one - w * s);
        z[k] = z[k] - a;
        Real scale = abs_up(z[k]);
        if (scale < Real(1L, p))
            scale = Real(1L, p);
        double rel = log2_abs(abs_up(a)) - log2_abs(scale);
        worst = std::max(worst, rel);
    }
    return worst;
}

} // namespace

void set_escalation_hook(EscalationHook hook) { hook_slot() = std::move(hook); }

void notify_escalation(mpfr_prec_t from, mpfr_prec_t to, const char *why)
{
    if (hook_slot())
        hook_slot()(from, to, why);
}

std::vector<CBall> complex_roots(const IntPoly &f, mpfr_prec_t prec)
{
    const int n = f.degree();
    if (n < 1)
        throw InputError("complex_roots of a constant");
    if (discriminant(f) == 0)
        throw InputError("complex_roots needs a squarefree polynomial");
    if (prec < 64)
        prec = 64;

    // Cauchy bound, then roots of unity perturbed off the real axis.
    double bound = 0;
    double lcd = std::fabs(f.lc().get_d());
    for (int k = 0; k < n; ++k)
        bound = std::max(bound, std::fabs(f.coeff(k).get_d()) / lcd);
    bound = 1 + bound;
    double start_r = std::min(bound, 1 + std::pow(bound, 1.0 / n));

    mpfr_prec_t p = std::min<mpfr_prec_t>(prec, 128);
    std::vector<Complex> z;
    for (int k = 0; k < n; ++k) {
        double t = 2 * M_PI * k / n + 0.7;
        double rr = start_r * (1 + 0.01 * k / n);
        z.emplace_back(Real(p), Real(p));
        mpfr_set_d(z.back().re.get(), rr * std::cos(t), MPFR_RNDN);
        mpfr_set_d(z.back().im.get(), rr * std::sin(t), MPFR_RNDN);
    }

    std::vector<Real> c = to_reals(f, p);
    int iters = 0;
    while (aberth_step(c, z) > -(double)p + 12) {
        if (++iters > 4000)
            throw PrecisionEscalation(p, "Aberth iteration did not converge");
    }
    while (p < prec) {
        p = std::min(prec, 2 * p);
        for (auto &zk : z)
            zk = with_prec(zk, p);
        c = to_reals(f, p);
        int k = 0;
        while (aberth_step(c, z) > -(double)p + 12) {
            if (++k > 60)
                throw PrecisionEscalation(p, "Aberth refinement stalled");
        }
    }
    aberth_step(c, z);

    // Inclusion radius n |f(z_k)| / |lc prod (z_k - z_j)|.
    std::vector<CBall> out;
    Real lc_abs = abs(Real(f.lc(), p));
    for (int k = 0; k < n; ++k) {
        Evaluation e = horner(c, z[k]);
        Real num(p);
        mpfr_add(num.get(), abs_up(e.value).get(), e.err.get(), MPFR_RNDU);
        Real den = lc_abs;
        for (int j = 0; j < n; ++j) {
            if (j == k)
                continue;
            Real d(p);
            mpfr_hypot(d.get(), (z[k].re - z[j].re).get(), (z[k].im - z[j].im).get(), MPFR_RNDD);
            mpfr_mul(den.get(), den.get(), d.get(), MPFR_RNDD);
        }
        Real r(p);
        mpfr_div(r.get(), num.get(), den.get(), MPFR_RNDU);
        mpfr_mul_ui(r.get(), r.get(), n, MPFR_RNDU);
        // Floor at a few ulps so exact hits still get a positive radius.
        Real floor_r = abs_up(z[k]) * pow2(-(long)p + 4, p);
        if (r < floor_r)
            r = floor_r;
        out.emplace_back(z[k], r);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Real d = abs_up(out[i].mid - out[j].mid);
            Real rs(64);
            mpfr_add(rs.get(), out[i].rad.get(), out[j].rad.get(), MPFR_RNDU);
            mpfr_mul_2ui(rs.get(), rs.get(), 1, MPFR_RNDU);
            if (!(d > rs))
                throw PrecisionEscalation(p, "root disks overlap");
        }
    for (const auto &b : out)
        if (log2_abs(b.rad) > -(double)prec / 2)
            throw PrecisionEscalation(p, "root radius too large");
    return out;
}

RootLabeling label_roots(const IntPoly &f, const Int &q, mpfr_prec_t prec)
{
    if (!has_weil_symmetry(f, q))
        throw InputError("label_roots: no functional equation for q = " + q.get_str());
    if (resultant(f, IntPoly{0, 0, 1} - IntPoly::monomial(q, 0)) == 0)
        throw InputError("label_roots: f has a root with mu^2 = q");
    RootLabeling L;
    L.f = f;
    L.q = q;
    L.g = f.degree() / 2;
    std::vector<CBall> r = complex_roots(f, prec);
    const int n = static_cast<int>(r.size());
    const mpfr_prec_t p = r[0].prec();
    CBall qb = CBall::exact(q, p);

    // Greedy matching on |mu_i mu_j - q|, certified by ball containment.
    std::vector<int> partner(n, -1);
    for (int i = 0; i < n; ++i) {
        if (partner[i] >= 0)
            continue;
        int best = -1;
        double best_v = 1e300;
        for (int j = 0; j < n; ++j) {
            if (j == i || partner[j] >= 0)
                continue;
            CBall d = r[i] * r[j] - qb;
            double v = log2_abs(abs_up(d.mid));
            if (v < best_v) {
                best_v = v;
                best = j;
            }
        }
        if (best < 0)
            throw InternalError("root pairing failed");
        CBall d = r[i] * r[best] - qb;
        if (abs_up(d.mid) > d.rad)
            throw PrecisionEscalation(p, "root pairing not certified");
        partner[i] = best;
        partner[best] = i;
    }

    struct Pair {
        int hi, lo;
        double arg_hi;
    };
    std::vector<Pair> pairs;
    for (int i = 0; i < n; ++i) {
        int j = partner[i];
        if (i > j)
            continue;
        double ai = arg(r[i].mid).to_double(), aj = arg(r[j].mid).to_double();
        if (ai >= aj)
            pairs.push_back({i, j, ai});
        else
            pairs.push_back({j, i, aj});
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const Pair &a, const Pair &b) { return a.arg_hi > b.arg_hi; });
    L.roots.assign(n, CBall(p));
    for (int k = 0; k < L.g; ++k) {
        L.roots[k] = r[pairs[k].hi];
        L.roots[L.pair(k)] = r[pairs[k].lo];
    }
    return L;
}

} // namespace gic
