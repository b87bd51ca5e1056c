// SPDX-License-Identifier: Apache-2.0
#include "gic/eigstruct.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace gic {

RatField::Elem RatField::inv(const Elem &a) const
{
    if (a == 0)
        throw InputError("inverse of zero");
    return 1 / a;
}

namespace {

u64 mult_order(u64 a, u64 p)
{
    u64 n = p - 1, ord = n;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d)
            continue;
        while (n % d == 0)
            n /= d;
        while (ord % d == 0 && powmod(a, ord / d, p) == 1)
            ord /= d;
    }
    if (n > 1 && powmod(a, ord / n, p) == 1)
        ord /= n;
    return ord;
}

} // namespace

SigmaGammaScan sigma_gamma_scan(u64 ell, u64 a)
{
    if (ell < 7 || !is_prime_ul(ell))
        throw InputError("sigma_gamma_scan needs a prime ell >= 7");
    SigmaGammaScan out;
    out.ell = ell;
    out.split = (ell % 4 == 1);
    if (a == 0) {
        for (u64 c = 2; c < ell; ++c)
            if (mult_order(c, ell) >= 5) {
                a = c;
                break;
            }
    }
    if (a % ell == 0 || mult_order(a % ell, ell) < 5)
        throw InputError("sigma_gamma_scan: a must have order >= 5 in F_ell^*");
    out.a = a % ell;

    // Gamma = {c + d i : c^2 + d^2 = 1}; split case is F_ell^* itself.
    ExtField F = out.split ? ExtField(ell, FpPoly(ell, {0, 1})) : ExtField(ell, FpPoly(ell, {1, 0, 1}));
    std::set<FqElem> squares;
    if (out.split) {
        for (u64 x = 1; x < ell; ++x)
            squares.insert(F.from_u64(mulmod(x, x, ell)));
    } else {
        for (u64 c = 0; c < ell; ++c) {
            u64 rhs = (1 + ell - mulmod(c, c, ell)) % ell;
            // ell = 3 mod 4: sqrt is rhs^{(ell+1)/4} when it exists.
            u64 d = powmod(rhs, (ell + 1) / 4, ell);
            if (mulmod(d, d, ell) != rhs)
                continue;
            for (u64 dd : {d, (ell - d) % ell}) {
                FqElem gam{c, dd};
                squares.insert(F.mul(gam, gam));
            }
        }
    }
    out.two_gamma_size = squares.size();
    FqField K{&F};
    FqElem A = F.from_u64(out.a);
    for (const auto &gam : squares)
        if (weakly_independent(K, A, F.inv(A), gam))
            ++out.independent;
    return out;
}

std::vector<ComplexTensorCandidate> superspecial_report(const RootLabeling &L)
{
    using C = std::complex<long double>;
    std::vector<C> vals;
    for (const auto &r : L.roots) {
        long double re = mpfr_get_ld(r.mid.re.get(), MPFR_RNDN);
        long double im = mpfr_get_ld(r.mid.im.get(), MPFR_RNDN);
        vals.emplace_back(re, im);
    }
    ApproxComplexField K{1e-12};
    std::vector<ComplexTensorCandidate> out;
    if (vals.size() != 6)
        return out;
    for (const auto &d : decompose_tensor(K, vals)) {
        ComplexTensorCandidate c;
        c.l1 = d.lambdas[0];
        c.l2 = d.lambdas[1];
        c.beta = d.betas[0];
        C s = c.l1 + c.l2, p = c.l1 * c.l2;
        auto near_int = [](C z) {
            return std::fabs(z.imag()) < 1e-9 && std::fabs(z.real() - std::round(z.real())) < 1e-9;
        };
        c.sum_and_product_integral = near_int(s) && near_int(p);
        out.push_back(c);
    }
    return out;
}

ModEllTensorCheck mod_ell_tensor_check(const IntPoly &f, u64 ell)
{
    ModEllTensorCheck out;
    if (f.degree() != 6)
        throw InputError("mod_ell_tensor_check needs degree 6");
    Factorization fac = factor_mod(f, ell);
    for (const auto &fe : fac.factors)
        if (fe.first.degree() > 2)
            return out;
    if (ell > 5000)
        throw InputError("mod_ell_tensor_check enumerates F_ell^2; ell too large");
    ExtField F = build_ext(ell, 2);
    std::vector<FqElem> roots;
    for (const auto &[phi, e] : fac.factors) {
        // Roots of each factor by enumeration, repeated e times.
        for (u64 i = 0; i < ell * ell; ++i) {
            FqElem x = F.element(i);
            FqElem v = F.zero();
            for (int k = phi.degree(); k >= 0; --k)
                v = F.add(F.mul(v, x), F.from_u64(phi.coeff(k)));
            if (F.is_zero(v))
                for (unsigned r = 0; r < e; ++r)
                    roots.push_back(x);
        }
    }
    if (roots.size() != 6)
        return out;
    out.splits = true;
    FqField K{&F};
    auto decs = decompose_tensor(K, roots);
    out.decompositions = decs.size();
    for (const auto &d : decs)
        if (weakly_independent(K, d.lambdas[0], d.lambdas[1], d.betas[0]))
            ++out.weakly_independent_decompositions;
    return out;
}

namespace {

using Vec = std::vector<Rat>;

Vec halves(const std::vector<int> &signs, size_t len)
{
    Vec v(len, Rat(0));
    size_t i = 0;
    for (int s : signs)
        v[i++] = Rat(s, 2);
    return v;
}

Vec a_weight(std::initializer_list<int> ones)
{
    // +1 at the listed slots, -1/2 elsewhere, on epsilon_1..epsilon_6.
    Vec v(6, Rat(-1, 2));
    for (int i : ones)
        v[i - 1] = 1;
    return v;
}

bool a_orbit(const Vec &v)
{
    // Half the coordinates 1, half -1/2.
    size_t ones = 0;
    for (const auto &x : v) {
        if (x == 1)
            ++ones;
        else if (x != Rat(-1, 2))
            return false;
    }
    return 2 * ones == v.size();
}

bool half_signs(const Vec &v, size_t upto, int parity)
{
    // Coordinates +-1/2 on the first upto slots; parity >= 0 asks for an even
    // (0) or odd (1) number of minus signs.
    int neg = 0;
    for (size_t i = 0; i < upto; ++i) {
        if (v[i] == Rat(-1, 2))
            ++neg;
        else if (v[i] != Rat(1, 2))
            return false;
    }
    return parity < 0 || neg % 2 == parity;
}

WeightFamily check(std::string name, std::vector<Vec> w, const std::function<bool(const Vec &)> &orbit)
{
    WeightFamily f;
    f.name = std::move(name);
    f.weights = std::move(w);
    const auto &l = f.weights;
    Vec lhs(l[0].size(), Rat(0)), rhs = lhs;
    for (size_t i = 0; i < lhs.size(); ++i) {
        lhs[i] = l[0][i] + l[1][i] + l[2][i];
        rhs[i] = l[3][i] + l[4][i] + l[5][i];
    }
    f.identity_holds = lhs == rhs;
    f.pairwise_distinct = true;
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = i + 1; j < 6; ++j)
            f.pairwise_distinct = f.pairwise_distinct && l[i] != l[j];
    f.in_weight_orbit = std::all_of(l.begin(), l.end(), orbit);
    return f;
}

} // namespace

bool WeightVerdict::ok() const
{
    return families.size() == 4 &&
           std::all_of(families.begin(), families.end(), [](const WeightFamily &f) { return f.ok(); });
}

WeightVerdict verify_weight_identities()
{
    WeightVerdict out;
    // A5: omega = 0, weights of the middle exterior power on epsilon_1..6.
    out.families.push_back(check("A5",
                                 {a_weight({2, 3, 4}), a_weight({1, 3, 5}), a_weight({1, 2, 6}),
                                  a_weight({1, 2, 4}), a_weight({2, 3, 5}), a_weight({1, 3, 6})},
                                 a_orbit));
    // B5: spin module, every sign pattern is a weight.
    out.families.push_back(check("B5",
                                 {halves({1, 1, 1, 1, 1}, 5), halves({-1, -1, -1, -1, -1}, 5),
                                  halves({1, 1, 1, 1, -1}, 5), halves({1, -1, 1, -1, 1}, 5),
                                  halves({1, 1, -1, 1, -1}, 5), halves({-1, 1, 1, 1, -1}, 5)},
                                 [](const Vec &v) { return half_signs(v, 5, -1); }));
    // D6 half-spin: an even number of minus signs.
    const std::vector<std::vector<int>> d = {
        {1, 1, 1, 1, 1, 1},   {-1, -1, -1, 1, -1, 1}, {1, 1, 1, -1, 1, -1},
        {-1, -1, 1, 1, 1, 1}, {1, 1, -1, -1, 1, 1},   {1, 1, 1, 1, -1, -1}};
    std::vector<Vec> dw, ew;
    for (const auto &s : d) {
        dw.push_back(halves(s, 6));
        ew.push_back(halves(s, 8));
    }
    out.families.push_back(check("D6", dw, [](const Vec &v) { return half_signs(v, 6, 0); }));
    // E7 on epsilon_1..8: half-sign vectors with product of signs 1 occur in
    // the 56-dimensional module; last two coordinates vanish.
    out.families.push_back(check("E7", ew, [](const Vec &v) {
        return half_signs(v, 6, 0) && v[6] == 0 && v[7] == 0;
    }));
    return out;
}

} // namespace gic
