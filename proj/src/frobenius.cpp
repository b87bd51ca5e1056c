// SPDX-License-Identifier: Apache-2.0
#include "gic/frobenius.hpp"

#include "gic/errors.hpp"
#include "gic/roots.hpp"

#include <fstream>
#include <sstream>

namespace gic {

namespace {

constexpr u64 kMaxFieldSize = u64(1) << 27;

} // namespace

Curve make_curve(const IntPoly &model, std::optional<Rat> height)
{
    const int d = model.degree();
    if (d < 3)
        throw InputError("curve model must have degree >= 3");
    Curve c;
    c.genus = (d - 1) / 2;
    c.model = model;
    c.height = height;
    if (discriminant(model) == 0)
        throw InputError("curve model is not squarefree");
    return c;
}

Curve parse_curve(const std::string &text)
{
    std::istringstream in(text);
    std::string line;
    std::optional<int> genus;
    std::vector<Int> coeffs;
    std::optional<Rat> height;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos)
            line.resize(h);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key))
            continue;
        std::string tok;
        try {
            if (key == "genus") {
                int g;
                if (!(ls >> g) || g < 1)
                    throw InputError("bad genus");
                genus = g;
            } else if (key == "coeffs") {
                coeffs.clear();
                while (ls >> tok)
                    coeffs.emplace_back(tok);
            } else if (key == "height") {
                if (!(ls >> tok))
                    throw InputError("missing height value");
                height = parse_rat(tok);
            } else {
                throw InputError("unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument &e) {
            throw InputError("curve file line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!genus)
        throw InputError("curve file lacks a genus line");
    if (coeffs.empty())
        throw InputError("curve file lacks a coeffs line");
    Curve c = make_curve(IntPoly(coeffs), height);
    if (c.genus != *genus)
        throw InputError("genus " + std::to_string(*genus) + " does not match model degree " +
                         std::to_string(c.model.degree()));
    return c;
}

Curve load_curve(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read curve file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_curve(ss.str());
}

void check_good_reduction(const IntPoly &model, u64 p)
{
    if (!is_prime_ul(p))
        throw InputError("need an odd prime, got " + std::to_string(p));
    // y^2 = f(x) is never smooth in characteristic 2.
    if (p == 2)
        throw BadReduction(p, "bad reduction at p = 2: y^2 = f(x) is singular in characteristic 2");
    if (mpz_divisible_ui_p(model.lc().get_mpz_t(), p))
        throw BadReduction(p, "p divides the leading coefficient");
    Int d = discriminant(model);
    if (mpz_divisible_ui_p(d.get_mpz_t(), p))
        throw BadReduction(p, "bad reduction at p = " + std::to_string(p));
}

std::vector<Int> count_points(const IntPoly &model, u64 p, int upto, u64 seed)
{
    check_good_reduction(model, p);
    FpPoly mp = FpPoly::reduce(model, p);
    std::vector<Int> out;
    for (int k = 1; k <= upto; ++k) {
        ExtField F = build_ext(p, k, seed);
        Int size = F.order();
        if (size > Int(static_cast<unsigned long>(kMaxFieldSize)))
            throw InputError("field F_" + std::to_string(p) + "^" + std::to_string(k) +
                             " too large for enumeration");
        const u64 n = size.get_ui();
        // Square table: 1 for nonzero squares.
        std::vector<char> sq(n, 0);
        for (u64 i = 1; i < n; ++i) {
            FqElem y = F.element(i);
            sq[F.index(F.mul(y, y))] = 1;
        }
        std::vector<FqElem> coef;
        for (u64 c : mp.coeffs())
            coef.push_back(F.from_u64(c));
        long chi_sum = 0;
        for (u64 i = 0; i < n; ++i) {
            FqElem x = F.element(i);
            FqElem v = F.zero();
            for (auto it = coef.rbegin(); it != coef.rend(); ++it)
                v = F.add(F.mul(v, x), *it);
            u64 vi = F.index(v);
            if (vi != 0)
                chi_sum += sq[vi] ? 1 : -1;
        }
        // Points at infinity: one for odd degree, 1 + chi(lc) for even degree.
        long inf = 1;
        if (model.degree() % 2 == 0)
            inf = 1 + (sq[F.index(F.from_u64(mp.lc()))] ? 1 : -1);
        out.push_back(size + chi_sum + inf);
    }
    return out;
}

IntPoly charpoly_from_counts(const std::vector<Int> &counts, const Int &q, int g)
{
    if (g < 1 || static_cast<int>(counts.size()) < g)
        throw InputError("need point counts over F_{q^k} for k = 1..g");
    // s_k = q^k + 1 - N_k;  k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} s_i.
    std::vector<Int> s(g + 1), e(g + 1);
    for (int k = 1; k <= g; ++k)
        s[k] = int_pow(q, k) + 1 - counts[k - 1];
    e[0] = 1;
    for (int k = 1; k <= g; ++k) {
        Int acc = 0;
        for (int i = 1; i <= k; ++i)
            acc += ((i % 2) ? 1 : -1) * e[k - i] * s[i];
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), k))
            throw InputError("point counts are inconsistent with a Weil polynomial");
        e[k] = acc / k;
    }
    std::vector<Int> c(2 * g + 1);
    for (int k = 0; k <= g; ++k)
        c[2 * g - k] = (k % 2) ? Int(-e[k]) : e[k];
    for (int j = 0; j < g; ++j)
        c[j] = int_pow(q, g - j) * c[2 * g - j];
    return IntPoly(std::move(c));
}

IntPoly frobenius_charpoly(const Curve &c, u64 p, u64 seed)
{
    auto counts = count_points(c.model, p, c.genus, seed);
    return charpoly_from_counts(counts, Int(static_cast<unsigned long>(p)), c.genus);
}

bool validate_weil(const IntPoly &f, const Int &q, mpfr_prec_t prec)
{
    if (!has_weil_symmetry(f, q) || f.lc() != 1)
        return false;
    auto roots = complex_roots(f, prec);
    CBall qb = CBall::exact(q, roots[0].prec());
    for (const auto &r : roots) {
        Complex conj(r.mid.re, -r.mid.im);
        CBall cb(conj, r.rad);
        CBall d = r * cb - qb;
        if (abs_up(d.mid) > d.rad)
            return false;
    }
    return true;
}

} // namespace gic
