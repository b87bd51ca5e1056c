// SPDX-License-Identifier: Apache-2.0
#include "gic/numkernel.hpp"

#include "gic/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gic {

Rat make_rat(const Int &num, const Int &den)
{
    if (den == 0)
        throw InputError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string &s)
{
    if (s.empty())
        throw InputError("empty rational");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos)
            return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        auto dot = s.find('.');
        if (dot == std::string::npos)
            return Rat(Int(s));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits == "-" || digits.empty())
            throw InputError("bad decimal: " + s);
        Int den = int_pow(Int(10), s.size() - dot - 1);
        return make_rat(Int(digits), den);
    } catch (const std::invalid_argument &) {
        throw InputError("cannot parse rational: " + s);
    }
}

IntPoly::IntPoly(std::vector<Int> c) : c_(std::move(c)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> c)
{
    for (long v : c)
        c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::monomial(const Int &c, int k)
{
    std::vector<Int> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Int IntPoly::coeff(int k) const
{
    if (k < 0 || k > degree())
        return 0;
    return c_[k];
}

Int IntPoly::lc() const { return c_.empty() ? Int(0) : c_.back(); }

Int IntPoly::eval(const Int &x) const
{
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

IntPoly IntPoly::derivative() const
{
    std::vector<Int> d;
    for (int k = 1; k <= degree(); ++k)
        d.push_back(c_[k] * k);
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator+(const IntPoly &o) const
{
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly &o) const
{
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = coeff(i) - o.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly &o) const
{
    if (is_zero() || o.is_zero())
        return {};
    std::vector<Int> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int &s) const
{
    std::vector<Int> r = c_;
    for (auto &v : r)
        v *= s;
    return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int &c = c_[k];
        if (c == 0)
            continue;
        Int a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (a != 1 || k == 0)
            os << a.get_str();
        if (k >= 1)
            os << "x";
        if (k >= 2)
            os << "^" << k;
    }
    return os.str();
}

Int bareiss_det(std::vector<std::vector<Int>> m)
{
    const size_t n = m.size();
    if (n == 0)
        return 1;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0)
                ++piv;
            if (piv == n)
                return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Int resultant(const IntPoly &f, const IntPoly &g)
{
    if (f.is_zero() || g.is_zero())
        return 0;
    const int m = f.degree(), n = g.degree();
    if (m == 0)
        return int_pow(f.lc(), n);
    if (n == 0)
        return int_pow(g.lc(), m);
    // Sylvester rows: n shifted copies of f, then m shifted copies of g,
    // highest coefficient leftmost.
    const int N = m + n;
    std::vector<std::vector<Int>> s(N, std::vector<Int>(N));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k)
            s[i][i + (m - k)] = f.coeff(k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k)
            s[n + i][i + (n - k)] = g.coeff(k);
    return bareiss_det(std::move(s));
}

Int discriminant(const IntPoly &f)
{
    const int d = f.degree();
    if (d < 1)
        throw InputError("discriminant of a constant");
    if (d == 1)
        return 1;
    Int r = resultant(f, f.derivative());
    Int q;
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), f.lc().get_mpz_t());
    return ((d * (d - 1) / 2) % 2) ? Int(-q) : q;
}

IntPoly reciprocal_transform(const IntPoly &phi, const Int &q)
{
    const int d = phi.degree();
    if (d < 0 || phi.coeff(0) == 0)
        throw InputError("reciprocal transform needs phi(0) != 0");
    std::vector<Int> r(d + 1);
    Int qj = 1;
    for (int j = 0; j <= d; ++j) {
        Int c = phi.coeff(j) * qj;
        if (!mpz_divisible_p(c.get_mpz_t(), phi.coeff(0).get_mpz_t()))
            throw InputError("reciprocal transform is not integral");
        r[d - j] = c / phi.coeff(0);
        qj *= q;
    }
    return IntPoly(std::move(r));
}

bool has_weil_symmetry(const IntPoly &f, const Int &q)
{
    const int d = f.degree();
    if (d < 0 || d % 2)
        return false;
    const int g = d / 2;
    // c_j q^j == q^g c_{2g-j}
    for (int j = 0; j <= d; ++j) {
        if (f.coeff(j) * int_pow(q, j) != int_pow(q, g) * f.coeff(d - j))
            return false;
    }
    return true;
}

IntPoly real_weil_poly(const IntPoly &f, const Int &q)
{
    if (!has_weil_symmetry(f, q))
        throw InputError("polynomial lacks the functional equation for q = " + q.get_str());
    const int g = f.degree() / 2;
    std::vector<Int> r = f.coeffs();
    std::vector<Int> h(g + 1);
    // Peel x^g (x + q/x)^k from the top; entry x^{g+k-2j} carries C(k,j) q^j.
    for (int k = g; k >= 0; --k) {
        h[k] = r[g + k];
        if (h[k] == 0)
            continue;
        Int binom = 1, qj = 1;
        for (int j = 0; j <= k; ++j) {
            r[g + k - 2 * j] -= h[k] * binom * qj;
            binom = binom * (k - j) / (j + 1);
            qj *= q;
        }
    }
    for (const auto &v : r)
        if (v != 0)
            throw InternalError("real Weil polynomial remainder is nonzero");
    return IntPoly(std::move(h));
}

IntPoly weil_from_real(const IntPoly &h, const Int &q)
{
    const int g = h.degree();
    if (g < 0)
        return {};
    std::vector<Int> f(2 * g + 1);
    for (int k = 0; k <= g; ++k) {
        Int binom = 1, qj = 1;
        for (int j = 0; j <= k; ++j) {
            f[g + k - 2 * j] += h.coeff(k) * binom * qj;
            binom = binom * (k - j) / (j + 1);
            qj *= q;
        }
    }
    return IntPoly(std::move(f));
}

Int int_pow(const Int &b, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

bool is_perfect_square(const Int &n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t());
}

TrialFactorization trial_factor(const Int &n, unsigned long bound)
{
    TrialFactorization out;
    Int m = abs(n);
    if (m == 0)
        throw InputError("trial_factor(0)");
    for (unsigned long p : primes_up_to(bound)) {
        if (m == 1)
            break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e)
            out.factors.emplace_back(Int(p), e);
        if (Int(p) * p > m)
            break;
    }
    // A leftover below bound^2 is prime.
    if (m > 1 && m <= Int(bound) * bound) {
        out.factors.emplace_back(m, 1);
        std::sort(out.factors.begin(), out.factors.end());
        m = 1;
    }
    out.cofactor = m;
    return out;
}

std::vector<unsigned long> primes_up_to(unsigned long n)
{
    // Sieve once up to the largest bound seen; callers get a prefix.
    static std::vector<unsigned long> cache;
    static unsigned long cached_to = 1;
    if (n > cached_to) {
        unsigned long m = std::max(n, 2 * cached_to);
        std::vector<bool> comp(m + 1, false);
        cache.clear();
        for (unsigned long i = 2; i <= m; ++i) {
            if (comp[i])
                continue;
            cache.push_back(i);
            for (unsigned long j = i * i; j <= m; j += i)
                comp[j] = true;
        }
        cached_to = m;
    }
    auto end = std::upper_bound(cache.begin(), cache.end(), n);
    return std::vector<unsigned long>(cache.begin(), end);
}

bool is_prime_ul(unsigned long n)
{
    Int z(n);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

bool fits_json_integer(const Int &n)
{
    return abs(n) < int_pow(Int(2), 53);
}

} // namespace gic
