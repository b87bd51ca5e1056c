// SPDX-License-Identifier: Apache-2.0
#ifndef GIC_EIGSTRUCT_HPP
#define GIC_EIGSTRUCT_HPP

#include "gic/errors.hpp"
#include "gic/finitefield.hpp"
#include "gic/numkernel.hpp"
#include "gic/roots.hpp"

#include <algorithm>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gic {

/* Field adaptors: Elem, one(), mul, inv, eq.  Only equality is needed by the
 * searches below, so approximate fields plug in too. */
struct RatField {
    using Elem = Rat;
    Elem one() const { return 1; }
    Elem mul(const Elem &a, const Elem &b) const { return a * b; }
    Elem inv(const Elem &a) const;
    bool eq(const Elem &a, const Elem &b) const { return a == b; }
};

struct FqField {
    const ExtField *F;
    using Elem = FqElem;
    Elem one() const { return F->one(); }
    Elem mul(const Elem &a, const Elem &b) const { return F->mul(a, b); }
    Elem inv(const Elem &a) const { return F->inv(a); }
    bool eq(const Elem &a, const Elem &b) const { return a == b; }
};

struct ApproxComplexField {
    double tol = 1e-20;
    using Elem = std::complex<long double>;
    Elem one() const { return 1; }
    Elem mul(const Elem &a, const Elem &b) const { return a * b; }
    Elem inv(const Elem &a) const { return Elem(1) / a; }
    bool eq(const Elem &a, const Elem &b) const
    {
        return std::abs(a - b) <= tol * std::max<long double>(1, std::abs(a));
    }
};

/* Multiset {lambda_i, lambda_i beta_j^{+-1}} with i < 2m, j < (n-1)/2. */
template <class E>
struct UDecomposition {
    std::vector<E> lambdas;
    std::vector<E> betas;
};

namespace detail {

template <class F>
bool take(const F &K, std::vector<typename F::Elem> &pool, const typename F::Elem &v)
{
    for (size_t i = 0; i < pool.size(); ++i)
        if (K.eq(pool[i], v)) {
            pool.erase(pool.begin() + i);
            return true;
        }
    return false;
}

template <class F>
std::vector<typename F::Elem> block(const F &K, const typename F::Elem &lam,
                                    const std::vector<typename F::Elem> &betas)
{
    std::vector<typename F::Elem> b{lam};
    for (const auto &be : betas) {
        b.push_back(K.mul(lam, be));
        b.push_back(K.mul(lam, K.inv(be)));
    }
    return b;
}

template <class F>
bool multiset_eq(const F &K, std::vector<typename F::Elem> a, const std::vector<typename F::Elem> &b)
{
    if (a.size() != b.size())
        return false;
    for (const auto &v : b)
        if (!take(K, a, v))
            return false;
    return true;
}

template <class F>
void partition_blocks(const F &K, const std::vector<typename F::Elem> &pool,
                      const std::vector<typename F::Elem> &betas, std::vector<typename F::Elem> &lams,
                      std::vector<UDecomposition<typename F::Elem>> &out)
{
    if (pool.empty()) {
        out.push_back({lams, betas});
        return;
    }
    // pool[0] is lambda or lambda beta_j^{+-1}; try each role.
    const auto &v = pool[0];
    std::vector<typename F::Elem> cands{v};
    for (const auto &be : betas) {
        cands.push_back(K.mul(v, K.inv(be)));
        cands.push_back(K.mul(v, be));
    }
    for (const auto &lam : cands) {
        std::vector<typename F::Elem> rest = pool;
        bool ok = true;
        for (const auto &x : block(K, lam, betas))
            ok = ok && take(K, rest, x);
        if (!ok)
            continue;
        lams.push_back(lam);
        partition_blocks(K, rest, betas, lams, out);
        lams.pop_back();
    }
}

template <class F>
bool same_decomp(const F &K, const UDecomposition<typename F::Elem> &a,
                 const UDecomposition<typename F::Elem> &b)
{
    if (!multiset_eq(K, a.lambdas, b.lambdas))
        return false;
    // Betas agree up to inversion, as multisets.
    std::vector<typename F::Elem> pool = b.betas;
    for (const auto &x : a.betas) {
        if (take(K, pool, x))
            continue;
        if (!take(K, pool, K.inv(x)))
            return false;
    }
    return true;
}

} // namespace detail

/* All decompositions of values (size 2m n, n odd) as the eigenvalue multiset
 * of a tensor product of a 2m-dimensional and an n-dimensional orthogonal
 * piece.  Betas range over ratios of values, so the search is finite. */
template <class F>
std::vector<UDecomposition<typename F::Elem>> u_membership(const F &K,
                                                          const std::vector<typename F::Elem> &values,
                                                          int m, int n)
{
    using E = typename F::Elem;
    if (m < 1 || n < 1 || n % 2 == 0 || static_cast<int>(values.size()) != 2 * m * n)
        throw InputError("u_membership: need 2mn values with n odd");
    const int J = (n - 1) / 2;
    std::vector<E> ratios;
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = 0; j < values.size(); ++j)
            if (i != j) {
                E r = K.mul(values[i], K.inv(values[j]));
                bool dup = false;
                for (const auto &x : ratios)
                    dup = dup || K.eq(x, r);
                if (!dup)
                    ratios.push_back(r);
            }
    if (J == 0)
        ratios = {K.one()};
    std::vector<UDecomposition<E>> raw;
    std::vector<E> betas;
    std::function<void(size_t)> choose = [&](size_t start) {
        if (static_cast<int>(betas.size()) == J) {
            std::vector<E> lams;
            detail::partition_blocks(K, values, betas, lams, raw);
            return;
        }
        for (size_t i = start; i < ratios.size(); ++i) {
            betas.push_back(ratios[i]);
            choose(i);
            betas.pop_back();
        }
    };
    if (J == 0) {
        std::vector<E> lams;
        detail::partition_blocks(K, values, betas, lams, raw);
    } else {
        choose(0);
    }
    std::vector<UDecomposition<E>> out;
    for (auto &d : raw) {
        bool seen = false;
        for (const auto &o : out)
            seen = seen || detail::same_decomp(K, o, d);
        if (!seen)
            out.push_back(std::move(d));
    }
    return out;
}

/* (m, n) = (1, 3): six values as {l1, l1 b, l1/b, l2, l2 b, l2/b}. */
template <class F>
std::vector<UDecomposition<typename F::Elem>> decompose_tensor(const F &K,
                                                              const std::vector<typename F::Elem> &values)
{
    return u_membership(K, values, 1, 3);
}

/* Lambda = {l1, l2}, Psi = {1, b, 1/b}: the six products are distinct and
 * (x1 p1)^2 = (x2 p2)(x3 p3) holds only for x1 = x2 = x3 with (p1, p2, p3)
 * one of (1,1,1), (1,b,1/b), (1,1/b,b), (b,b,b), (1/b,1/b,1/b). */
template <class F>
bool weakly_independent(const F &K, const typename F::Elem &l1, const typename F::Elem &l2,
                        const typename F::Elem &beta)
{
    using E = typename F::Elem;
    const E lam[2] = {l1, l2};
    const E psi[3] = {K.one(), beta, K.inv(beta)};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (K.eq(K.mul(lam[i / 3], psi[i % 3]), K.mul(lam[j / 3], psi[j % 3])))
                return false;
    auto allowed = [](int a, int b, int c) {
        return (a == 0 && b == 0 && c == 0) || (a == 0 && b == 1 && c == 2) ||
               (a == 0 && b == 2 && c == 1) || (a == 1 && b == 1 && c == 1) ||
               (a == 2 && b == 2 && c == 2);
    };
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
            for (int x3 = 0; x3 < 2; ++x3)
                for (int p1 = 0; p1 < 3; ++p1)
                    for (int p2 = 0; p2 < 3; ++p2)
                        for (int p3 = 0; p3 < 3; ++p3) {
                            E a = K.mul(lam[x1], psi[p1]);
                            E lhs = K.mul(a, a);
                            E rhs = K.mul(K.mul(lam[x2], psi[p2]), K.mul(lam[x3], psi[p3]));
                            if (!K.eq(lhs, rhs))
                                continue;
                            if (!(x1 == x2 && x2 == x3 && allowed(p1, p2, p3)))
                                return false;
                        }
    return true;
}

struct SigmaGammaScan {
    u64 ell = 0;
    u64 a = 0;              // generator-side eigenvalue, order >= 5 in F_ell^*
    bool split = false;     // -1 is a square mod ell
    u64 two_gamma_size = 0;
    u64 independent = 0;    // gammas giving a weakly independent configuration
};

/* Eigenvalues {a^{+-1}} x {1, gamma^{+-1}} for gamma over the squares of the
 * norm-one group; counts weakly independent configurations.  a = 0 picks
 * the least element of order >= 5. */
SigmaGammaScan sigma_gamma_scan(u64 ell, u64 a = 0);

/* Tensor decompositions of the complex roots, with a rationality guard on
 * l1 + l2 and l1 l2 (both must round to integers). */
struct ComplexTensorCandidate {
    std::complex<long double> l1, l2, beta;
    bool sum_and_product_integral = false;
};
std::vector<ComplexTensorCandidate> superspecial_report(const RootLabeling &L);

/* Roots of f mod ell in F_{ell^2} when f splits there (degree <= 2 factors),
 * with the tensor decompositions of that multiset. */
struct ModEllTensorCheck {
    bool splits = false;
    size_t decompositions = 0;
    size_t weakly_independent_decompositions = 0;
};
ModEllTensorCheck mod_ell_tensor_check(const IntPoly &f, u64 ell);

/* Six minuscule weights (epsilon coordinates) with l1+l2+l3 = l4+l5+l6. */
struct WeightFamily {
    std::string name;  // "A5", "B5", "D6", "E7"
    std::vector<std::vector<Rat>> weights;
    bool identity_holds = false;
    bool pairwise_distinct = false;
    bool in_weight_orbit = false;  // each vector is a weight of the minuscule module

    bool ok() const { return identity_holds && pairwise_distinct && in_weight_orbit; }
};

struct WeightVerdict {
    std::vector<WeightFamily> families;

    bool ok() const;
};

WeightVerdict verify_weight_identities();

} // namespace gic

#endif
