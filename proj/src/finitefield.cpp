// SPDX-License-Identifier: Apache-2.0
#include "gic/finitefield.hpp"

#include "gic/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gic {

u64 mulmod(u64 a, u64 b, u64 p)
{
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 powmod(u64 a, u64 e, u64 p)
{
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p)
{
    if (a % p == 0)
        throw InputError("inverse of zero mod p");
    return powmod(a, p - 2, p);
}

FpPoly::FpPoly(u64 p, std::vector<u64> c) : p_(p), c_(std::move(c))
{
    for (auto &v : c_)
        v %= p_;
    trim();
}

FpPoly FpPoly::reduce(const IntPoly &f, u64 p)
{
    std::vector<u64> c;
    Int pp(static_cast<unsigned long>(p));
    for (const auto &v : f.coeffs()) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pp.get_mpz_t());
        c.push_back(r.get_ui());
    }
    return FpPoly(p, std::move(c));
}

void FpPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

u64 FpPoly::eval(u64 x) const
{
    u64 r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = (mulmod(r, x, p_) + *it) % p_;
    return r;
}

FpPoly FpPoly::operator+(const FpPoly &o) const
{
    std::vector<u64> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = (coeff(i) + o.coeff(i)) % p_;
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly &o) const
{
    std::vector<u64> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = (coeff(i) + p_ - o.coeff(i)) % p_;
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly &o) const
{
    if (is_zero() || o.is_zero())
        return FpPoly(p_, {});
    std::vector<u64> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i])
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(c_[i], o.c_[j], p_)) % p_;
    }
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::scale(u64 s) const
{
    std::vector<u64> r = c_;
    for (auto &v : r)
        v = mulmod(v, s, p_);
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::monic() const
{
    if (is_zero())
        return *this;
    return scale(invmod(lc(), p_));
}

FpPoly FpPoly::derivative() const
{
    std::vector<u64> r;
    for (int k = 1; k <= degree(); ++k)
        r.push_back(mulmod(c_[k], k % p_, p_));
    return FpPoly(p_, std::move(r));
}

bool FpPoly::operator<(const FpPoly &o) const
{
    if (degree() != o.degree())
        return degree() < o.degree();
    return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

IntPoly FpPoly::lift() const
{
    std::vector<Int> c;
    for (u64 v : c_)
        c.emplace_back(static_cast<unsigned long>(v));
    return IntPoly(std::move(c));
}

std::string FpPoly::to_string() const { return lift().to_string(); }

std::pair<FpPoly, FpPoly> divrem(const FpPoly &a, const FpPoly &b)
{
    if (b.is_zero())
        throw InputError("polynomial division by zero");
    const u64 p = a.p();
    std::vector<u64> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db)
        return {FpPoly(p, {}), a};
    std::vector<u64> q(a.degree() - db + 1, 0);
    const u64 inv = invmod(b.lc(), p);
    for (int k = a.degree(); k >= db; --k) {
        u64 c = mulmod(r[k], inv, p);
        q[k - db] = c;
        if (!c)
            continue;
        for (int j = 0; j <= db; ++j)
            r[k - db + j] = (r[k - db + j] + p - mulmod(c, b.coeff(j), p)) % p;
    }
    r.resize(db);
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly mod(const FpPoly &a, const FpPoly &m) { return divrem(a, m).second; }

FpPoly gcd(FpPoly a, FpPoly b)
{
    while (!b.is_zero()) {
        FpPoly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly powmod(const FpPoly &base, const Int &e, const FpPoly &m)
{
    FpPoly r = mod(FpPoly::constant(m.p(), 1), m);
    FpPoly b = mod(base, m);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = mod(r * r, m);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = mod(r * b, m);
    }
    return r;
}

namespace {

// c(x) with c' = 0 in characteristic p: c = d(x^p); return d.
FpPoly pth_root(const FpPoly &c)
{
    const u64 p = c.p();
    std::vector<u64> d;
    for (int k = 0; k <= c.degree(); k += static_cast<int>(p))
        d.push_back(c.coeff(k));  // a^p = a in F_p
    return FpPoly(p, std::move(d));
}

void sff_rec(const FpPoly &f, unsigned mult, std::vector<std::pair<FpPoly, unsigned>> &out)
{
    const u64 p = f.p();
    if (f.degree() < 1)
        return;
    FpPoly fd = f.derivative();
    if (fd.is_zero()) {
        sff_rec(pth_root(f), mult * static_cast<unsigned>(p), out);
        return;
    }
    FpPoly c = gcd(f, fd);
    FpPoly w = divrem(f, c).first;
    unsigned i = 1;
    while (!w.is_one()) {
        FpPoly y = gcd(w, c);
        FpPoly fac = divrem(w, y).first;
        if (fac.degree() > 0)
            out.emplace_back(fac.monic(), i * mult);
        w = y;
        c = divrem(c, y).first;
        ++i;
    }
    if (!c.is_one() && c.degree() > 0)
        sff_rec(pth_root(c), mult * static_cast<unsigned>(p), out);
}

} // namespace

std::vector<std::pair<FpPoly, unsigned>> squarefree_factorization(const FpPoly &f)
{
    std::vector<std::pair<FpPoly, unsigned>> out;
    sff_rec(f.monic(), 1, out);
    std::sort(out.begin(), out.end(),
              [](const auto &a, const auto &b) { return a.second < b.second; });
    return out;
}

std::vector<std::pair<FpPoly, int>> distinct_degree_factorization(const FpPoly &f)
{
    const u64 p = f.p();
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly rest = f.monic();
    FpPoly x = FpPoly::x(p);
    FpPoly xp = mod(x, rest);
    const Int P(static_cast<unsigned long>(p));
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        xp = powmod(xp, P, rest);
        FpPoly g = gcd(rest, xp - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = divrem(rest, g).first;
            xp = mod(xp, rest);
        }
    }
    if (rest.degree() > 0)
        out.emplace_back(rest.monic(), rest.degree());
    return out;
}

std::vector<FpPoly> equal_degree_factorization(const FpPoly &f, int d, std::mt19937_64 &rng)
{
    const u64 p = f.p();
    if (f.degree() == d)
        return {f.monic()};
    const int n = f.degree();
    for (;;) {
        std::vector<u64> c(n);
        for (auto &v : c)
            v = rng() % p;
        FpPoly a(p, std::move(c));
        if (a.degree() < 1)
            continue;
        FpPoly b(p, {});
        if (p == 2) {
            // Trace map a + a^2 + ... + a^(2^(kd-1)), here k = 1.
            FpPoly t = mod(a, f), s = t;
            for (int i = 1; i < d; ++i) {
                t = mod(t * t, f);
                s = s + t;
            }
            b = s;
        } else {
            Int e = (int_pow(Int(static_cast<unsigned long>(p)), d) - 1) / 2;
            b = powmod(a, e, f) - FpPoly::constant(p, 1);
        }
        FpPoly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < n) {
            auto l = equal_degree_factorization(g, d, rng);
            auto r = equal_degree_factorization(divrem(f, g).first.monic(), d, rng);
            l.insert(l.end(), r.begin(), r.end());
            return l;
        }
    }
}

bool is_irreducible(const FpPoly &f)
{
    if (f.degree() < 1)
        return false;
    if (f.derivative().is_zero() || gcd(f, f.derivative()).degree() > 0)
        return false;
    auto ddf = distinct_degree_factorization(f);
    return ddf.size() == 1 && ddf[0].second == f.degree();
}

std::vector<int> Factorization::degrees() const
{
    std::vector<int> d;
    for (const auto &[fac, e] : factors)
        for (unsigned i = 0; i < e; ++i)
            d.push_back(fac.degree());
    std::sort(d.rbegin(), d.rend());
    return d;
}

bool Factorization::squarefree() const
{
    for (const auto &fe : factors)
        if (fe.second > 1)
            return false;
    return true;
}

Factorization factor_mod(const IntPoly &f, u64 p, u64 seed)
{
    if (p < 2 || !is_prime_ul(p))
        throw InputError("factor_mod needs a prime modulus");
    FpPoly fp = FpPoly::reduce(f, p);
    if (fp.degree() != f.degree())
        throw BadReduction(p, "p divides the leading coefficient");
    Factorization out;
    out.p = p;
    out.unit = fp.lc();
    std::mt19937_64 rng(seed);
    for (const auto &[sq, mult] : squarefree_factorization(fp)) {
        for (const auto &[part, d] : distinct_degree_factorization(sq)) {
            for (auto &irr : equal_degree_factorization(part, d, rng))
                out.factors.emplace_back(std::move(irr), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto &a, const auto &b) {
        if (a.first == b.first)
            return a.second < b.second;
        return a.first < b.first;
    });
    return out;
}

ExtField::ExtField(u64 p, FpPoly modulus) : p_(p), k_(modulus.degree()), m_(modulus.monic())
{
    if (k_ < 1)
        throw InputError("extension modulus must have positive degree");
    if (!is_irreducible(m_))
        throw InputError("extension modulus is reducible");
    tail_.assign(m_.coeffs().begin(), m_.coeffs().begin() + k_);
}

Int ExtField::order() const { return int_pow(Int(static_cast<unsigned long>(p_)), k_); }

FqElem ExtField::one() const
{
    FqElem r = zero();
    r[0] = 1 % p_;
    return r;
}

FqElem ExtField::from_u64(u64 v) const
{
    FqElem r = zero();
    r[0] = v % p_;
    return r;
}

FqElem ExtField::from_poly(const FpPoly &a) const
{
    FpPoly r = mod(FpPoly(p_, a.coeffs()), m_);
    FqElem e = zero();
    for (int i = 0; i <= r.degree(); ++i)
        e[i] = r.coeff(i);
    return e;
}

FpPoly ExtField::to_poly(const FqElem &a) const { return FpPoly(p_, a); }

FqElem ExtField::add(const FqElem &a, const FqElem &b) const
{
    FqElem r(k_);
    for (int i = 0; i < k_; ++i)
        r[i] = (a[i] + b[i]) % p_;
    return r;
}

FqElem ExtField::sub(const FqElem &a, const FqElem &b) const
{
    FqElem r(k_);
    for (int i = 0; i < k_; ++i)
        r[i] = (a[i] + p_ - b[i]) % p_;
    return r;
}

FqElem ExtField::neg(const FqElem &a) const { return sub(zero(), a); }

FqElem ExtField::mul(const FqElem &a, const FqElem &b) const
{
    std::vector<u64> t(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i) {
        if (!a[i])
            continue;
        for (int j = 0; j < k_; ++j)
            t[i + j] = (t[i + j] + mulmod(a[i], b[j], p_)) % p_;
    }
    // t^k = -sum tail_i t^i
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        u64 c = t[d];
        if (!c)
            continue;
        t[d] = 0;
        for (int i = 0; i < k_; ++i)
            t[d - k_ + i] = (t[d - k_ + i] + p_ - mulmod(c, tail_[i], p_)) % p_;
    }
    t.resize(k_);
    return t;
}

FqElem ExtField::pow(const FqElem &a, const Int &e) const
{
    if (e < 0)
        return pow(inv(a), -e);
    FqElem r = one();
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = mul(r, a);
    }
    return r;
}

FqElem ExtField::inv(const FqElem &a) const
{
    if (is_zero(a))
        throw InputError("inverse of zero in F_q");
    return pow(a, order() - 2);
}

bool ExtField::is_zero(const FqElem &a) const
{
    return std::all_of(a.begin(), a.end(), [](u64 v) { return v == 0; });
}

int ExtField::quad_char(const FqElem &a) const
{
    if (p_ == 2)
        throw InputError("quadratic character needs odd characteristic");
    if (is_zero(a))
        return 0;
    FqElem r = pow(a, (order() - 1) / 2);
    return r == one() ? 1 : -1;
}

u64 ExtField::index(const FqElem &a) const
{
    u64 idx = 0;
    for (int i = k_; i-- > 0;)
        idx = idx * p_ + a[i];
    return idx;
}

FqElem ExtField::element(u64 idx) const
{
    FqElem r(k_);
    for (int i = 0; i < k_; ++i) {
        r[i] = idx % p_;
        idx /= p_;
    }
    return r;
}

ExtField build_ext(u64 p, int k, u64 seed)
{
    if (p < 2 || !is_prime_ul(p))
        throw InputError("build_ext needs a prime");
    if (k < 1)
        throw InputError("build_ext needs k >= 1");
    if (k == 1)
        return ExtField(p, FpPoly(p, {0, 1}));
    std::mt19937_64 rng(seed);
    for (;;) {
        std::vector<u64> c(k + 1);
        for (int i = 0; i < k; ++i)
            c[i] = rng() % p;
        c[k] = 1;
        FpPoly m(p, std::move(c));
        if (m.coeff(0) != 0 && is_irreducible(m))
            return ExtField(p, m);
    }
}

} // namespace gic
