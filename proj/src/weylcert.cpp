// SPDX-License-Identifier: Apache-2.0
#include "gic/weylcert.hpp"

#include "gic/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace gic {

int SignedPerm::act(int label) const
{
    const int n = g();
    const int k = label < n ? label : 2 * n - 1 - label;
    const bool hi = label >= n;
    const int t = perm[k];
    return (hi != static_cast<bool>(flip[k])) ? 2 * n - 1 - t : t;
}

std::vector<SignedPerm> weyl_group(int g)
{
    if (g < 1 || g > 8)
        throw InputError("weyl_group: genus out of range");
    std::vector<SignedPerm> out;
    std::vector<int> perm(g);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << g); ++mask) {
            SignedPerm s;
            s.perm = perm;
            s.flip.resize(g);
            for (int k = 0; k < g; ++k)
                s.flip[k] = (mask >> k) & 1;
            out.push_back(std::move(s));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::string SignedClass::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < pos.size(); ++i)
        os << (i ? "," : "") << pos[i];
    os << '|';
    for (size_t i = 0; i < neg.size(); ++i)
        os << (i ? "," : "") << neg[i];
    os << ']';
    return os.str();
}

namespace {

void partitions(int n, int maxpart, std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions_of(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions(n, n, cur, out);
    return out;
}

} // namespace

std::vector<SignedClass> weyl_classes(int g)
{
    std::vector<SignedClass> out;
    for (int a = 0; a <= g; ++a)
        for (const auto &pa : partitions_of(a))
            for (const auto &pb : partitions_of(g - a))
                out.push_back({pa, pb});
    std::sort(out.begin(), out.end());
    return out;
}

SignedClass class_of(const SignedPerm &s)
{
    const int g = s.g();
    std::vector<char> seen(g, 0);
    SignedClass c;
    for (int k = 0; k < g; ++k) {
        if (seen[k])
            continue;
        int len = 0, flips = 0;
        for (int j = k; !seen[j]; j = s.perm[j]) {
            seen[j] = 1;
            ++len;
            flips += s.flip[j];
        }
        (flips % 2 ? c.neg : c.pos).push_back(len);
    }
    std::sort(c.pos.rbegin(), c.pos.rend());
    std::sort(c.neg.rbegin(), c.neg.rend());
    return c;
}

namespace {

FpPoly reciprocal_mod(const FpPoly &phi, u64 q)
{
    const u64 p = phi.p();
    const int d = phi.degree();
    const u64 inv0 = invmod(phi.coeff(0), p);
    std::vector<u64> r(d + 1);
    u64 qj = 1;
    for (int j = 0; j <= d; ++j) {
        r[d - j] = mulmod(mulmod(phi.coeff(j), qj, p), inv0, p);
        qj = mulmod(qj, q, p);
    }
    return FpPoly(p, std::move(r));
}

u64 q_mod(const Int &q, u64 p)
{
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), q.get_mpz_t(), p);
    return r.get_ui();
}

} // namespace

std::optional<std::string> scan_obstruction(const IntPoly &f, const Int &q, u64 p)
{
    if (p < 3)
        return "p = 2 is not used";
    if (mpz_divisible_ui_p(q.get_mpz_t(), p))
        return "p divides q";
    if (mpz_divisible_ui_p(f.lc().get_mpz_t(), p))
        return "p divides the leading coefficient";
    FpPoly fp = FpPoly::reduce(f, p);
    if (gcd(fp, fp.derivative()).degree() > 0)
        return "f mod p is not squarefree";
    FpPoly x2q(p, {p - q_mod(q, p), 0, 1});
    if (gcd(fp, x2q).degree() > 0)
        return "f mod p has a root with mu^2 = q";
    return std::nullopt;
}

SignedClass signed_cycle_type(const IntPoly &f, const Int &q, u64 p, u64 seed)
{
    if (f.degree() < 2 || f.degree() % 2)
        throw InputError("signed_cycle_type needs even degree");
    if (auto why = scan_obstruction(f, q, p))
        throw BadReduction(p, *why);
    Factorization fac = factor_mod(f, p, seed);
    const u64 qm = q_mod(q, p);
    std::vector<char> used(fac.factors.size(), 0);
    SignedClass c;
    for (size_t i = 0; i < fac.factors.size(); ++i) {
        if (used[i])
            continue;
        const FpPoly &phi = fac.factors[i].first;
        FpPoly star = reciprocal_mod(phi, qm);
        used[i] = 1;
        if (star == phi) {
            if (phi.degree() % 2)
                throw InternalError("self-paired factor of odd degree");
            c.neg.push_back(phi.degree() / 2);
            continue;
        }
        bool found = false;
        for (size_t j = i + 1; j < fac.factors.size(); ++j) {
            if (!used[j] && fac.factors[j].first == star) {
                used[j] = 1;
                found = true;
                break;
            }
        }
        if (!found)
            throw InternalError("factor without reciprocal partner; f lacks the functional equation");
        c.pos.push_back(phi.degree());
    }
    std::sort(c.pos.rbegin(), c.pos.rend());
    std::sort(c.neg.rbegin(), c.neg.rend());
    return c;
}

WeylCertificate certify_weyl(const IntPoly &f, const Int &q, u64 prime_bound, u64 seed)
{
    if (!has_weil_symmetry(f, q))
        throw InputError("certify_weyl: f lacks the functional equation");
    if (f.lc() != 1)
        throw InputError("certify_weyl: f must be monic");
    if (resultant(f, IntPoly::monomial(1, 2) - IntPoly::monomial(q, 0)) == 0)
        throw InputError("certify_weyl: f has a root with mu^2 = q");
    const int g = f.degree() / 2;
    WeylCertificate cert;
    cert.prime_bound = prime_bound;
    const auto classes = weyl_classes(g);
    const SignedClass full_cycle{{}, {g}};
    for (u64 p : primes_up_to(prime_bound)) {
        if (p < 3)
            continue;
        if (scan_obstruction(f, q, p)) {
            cert.skipped.push_back(p);
            continue;
        }
        SignedClass c = signed_cycle_type(f, q, p, seed);
        cert.witnesses.emplace(c, p);
        if (c == full_cycle && !cert.irreducible_witness)
            cert.irreducible_witness = p;
        if (cert.witnesses.size() == classes.size())
            break;
    }
    for (const auto &c : classes)
        if (!cert.witnesses.count(c))
            cert.missing.push_back(c);
    cert.certified = cert.missing.empty() && cert.irreducible_witness.has_value();
    return cert;
}

A7Certificate certify_A7(const IntPoly &f, u64 prime_bound, u64 seed)
{
    if (f.degree() != 7)
        throw InputError("certify_A7 needs a degree 7 polynomial");
    A7Certificate cert;
    cert.discriminant = discriminant(f);
    cert.square_discriminant = is_perfect_square(cert.discriminant);
    for (u64 p : primes_up_to(prime_bound)) {
        if (mpz_divisible_ui_p(cert.discriminant.get_mpz_t(), p) ||
            mpz_divisible_ui_p(f.lc().get_mpz_t(), p))
            continue;
        auto deg = factor_mod(f, p, seed).degrees();
        if (deg == std::vector<int>{7} && !cert.irreducible_witness)
            cert.irreducible_witness = p;
        if (deg == std::vector<int>{5, 1, 1} && !cert.five_cycle_witness)
            cert.five_cycle_witness = p;
        if (cert.irreducible_witness && cert.five_cycle_witness)
            break;
    }
    cert.certified = cert.square_discriminant && cert.irreducible_witness && cert.five_cycle_witness;
    return cert;
}

} // namespace gic
