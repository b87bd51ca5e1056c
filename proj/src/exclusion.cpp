// SPDX-License-Identifier: Apache-2.0
#include "gic/exclusion.hpp"

#include "gic/bounds.hpp"
#include "gic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace gic {

unsigned Monomial::degree() const
{
    unsigned d = 0;
    for (const auto &f : factors)
        d += f.second;
    return d;
}

bool Monomial::operator<(const Monomial &o) const
{
    if (factors != o.factors)
        return factors < o.factors;
    return coeff < o.coeff;
}

bool Monomial::operator==(const Monomial &o) const
{
    return coeff == o.coeff && factors == o.factors;
}

Monomial mono(std::vector<std::pair<int, unsigned>> factors, Int coeff)
{
    std::sort(factors.begin(), factors.end());
    Monomial m;
    m.coeff = std::move(coeff);
    for (const auto &f : factors) {
        if (f.second == 0)
            continue;
        if (!m.factors.empty() && m.factors.back().first == f.first)
            m.factors.back().second += f.second;
        else
            m.factors.push_back(f);
    }
    return m;
}

namespace {

std::string mono_string(const Monomial &m)
{
    std::ostringstream os;
    bool first = true;
    if (m.coeff != 1 || m.factors.empty()) {
        os << m.coeff.get_str();
        first = false;
    }
    for (const auto &[l, e] : m.factors) {
        os << (first ? "" : "*") << "mu" << l;
        if (e != 1)
            os << "^" << e;
        first = false;
    }
    return os.str();
}

std::string mono_key(const Monomial &m)
{
    std::string s = m.coeff.get_str(16) + ":";
    for (const auto &[l, e] : m.factors)
        s += std::to_string(l) + "^" + std::to_string(e) + ",";
    return s;
}

Monomial map_labels(const Monomial &m, const SignedPerm &s)
{
    std::vector<std::pair<int, unsigned>> f;
    for (const auto &[l, e] : m.factors)
        f.emplace_back(s.act(l), e);
    return mono(std::move(f), m.coeff);
}

// Prime divisors below bound and the unfactored remainder.
void absorb_factors(const Int &n, unsigned long bound, ExclusionReport &rep)
{
    if (n == 0)
        return;
    TrialFactorization tf = trial_factor(n, bound);
    for (const auto &pe : tf.factors)
        rep.small_primes.insert(pe.first);
    if (tf.cofactor != 1)
        rep.cofactors.insert(tf.cofactor);
}

double log_abs_int(const Int &n)
{
    if (n == 0)
        return -INFINITY;
    long e;
    double m = mpz_get_d_2exp(&e, n.get_mpz_t());
    return std::log(std::fabs(m)) + e * std::log(2.0);
}

} // namespace

std::string Relation::to_string() const { return mono_string(lhs) + " - " + mono_string(rhs); }

Relation apply(const SignedPerm &s, const Relation &r)
{
    return {map_labels(r.lhs, s), map_labels(r.rhs, s)};
}

std::string canonical_key(const Relation &r, const std::vector<SignedPerm> &W)
{
    std::string best;
    for (const auto &w : W) {
        Relation t = apply(w, r);
        std::string a = mono_key(t.lhs), b = mono_key(t.rhs);
        if (b < a)
            std::swap(a, b);
        std::string k = a + "|" + b;
        if (best.empty() || k < best)
            best = std::move(k);
    }
    return best;
}

bool identically_zero(const Relation &r, int g, const Int &q)
{
    // Rewrite mu_i for i >= g as q / mu_{2g-1-i}; the representation
    // c q^a prod_{i<g} mu_i^{e_i} is then unique.
    auto normal = [&](const Monomial &m, long &a, std::vector<long> &e) {
        a = 0;
        e.assign(g, 0);
        for (const auto &[l, x] : m.factors) {
            if (l < g) {
                e[l] += x;
            } else {
                a += x;
                e[2 * g - 1 - l] -= x;
            }
        }
    };
    long al, ar;
    std::vector<long> el, er;
    normal(r.lhs, al, el);
    normal(r.rhs, ar, er);
    if (el != er)
        return false;
    long d = std::min(al, ar);
    return r.lhs.coeff * int_pow(q, al - d) == r.rhs.coeff * int_pow(q, ar - d);
}

double log_weil_bound(const Relation &r, int g, const Int &q)
{
    const double lq = std::log(q.get_d());
    auto side = [&](const Monomial &m) { return log_abs_int(m.coeff) + 0.5 * m.degree() * lq; };
    double a = side(r.lhs), b = side(r.rhs);
    double hi = std::max(a, b), lo = std::min(a, b);
    double one = hi + std::log1p(std::exp(lo - hi));
    double order = std::ldexp(1.0, g);
    for (int k = 2; k <= g; ++k)
        order *= k;
    return order * one;
}

NormEngine::NormEngine(IntPoly f, Int q, mpfr_prec_t start_prec, long guard_bits)
    : f_(std::move(f)), q_(std::move(q)), start_(start_prec), guard_(guard_bits)
{
    if (!has_weil_symmetry(f_, q_))
        throw InputError("NormEngine: polynomial lacks the functional equation");
    g_ = f_.degree() / 2;
    W_ = weyl_group(g_);
}

const RootLabeling &NormEngine::labeling(mpfr_prec_t prec)
{
    auto it = labelings_.find(prec);
    if (it != labelings_.end())
        return it->second;
    return labelings_.emplace(prec, label_roots(f_, q_, prec)).first->second;
}

Int NormEngine::norm_at(const Relation &r, mpfr_prec_t prec)
{
    const RootLabeling &L = labeling(prec);
    const mpfr_prec_t p = L.prec();
    std::map<std::pair<int, unsigned>, CBall> powers;
    auto power = [&](int l, unsigned e) -> const CBall & {
        auto key = std::make_pair(l, e);
        auto it = powers.find(key);
        if (it == powers.end())
            it = powers.emplace(key, L.roots[l].pow(e)).first;
        return it->second;
    };
    auto eval = [&](const Monomial &m, const SignedPerm &w) {
        CBall v = CBall::exact(m.coeff, p);
        for (const auto &[l, e] : m.factors)
            v = v * power(w.act(l), e);
        return v;
    };
    CBall prod = CBall::exact(1, p);
    for (const auto &w : W_)
        prod = prod * (eval(r.lhs, w) - eval(r.rhs, w));
    max_prec_ = std::max(max_prec_, p);
    return certified_integer(prod, -20);
}

Int NormEngine::norm(const Relation &r)
{
    if (identically_zero(r, g_, q_))
        return 0;
    std::string key = canonical_key(r, W_);
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;
    double bits = log_weil_bound(r, g_, q_) / std::log(2.0) + guard_;
    mpfr_prec_t prec = start_ ? start_ : std::max<mpfr_prec_t>(64, static_cast<mpfr_prec_t>(std::ceil(bits)));
    for (;;) {
        try {
            Int v = norm_at(r, prec);
            cache_.emplace(key, v);
            return v;
        } catch (const PrecisionEscalation &e) {
            if (2 * prec > kPrecisionCap)
                throw PrecisionEscalation(prec, std::string("precision cap reached: ") + e.what());
            notify_escalation(prec, 2 * prec, e.what());
            prec *= 2;
        }
    }
}

std::vector<Relation> structural_relations(int g, const Int &q, unsigned maxN)
{
    const auto W = weyl_group(g);
    std::set<std::string> seen;
    std::vector<Relation> out;
    auto add = [&](const Relation &r) {
        if (!identically_zero(r, g, q) && seen.insert(canonical_key(r, W)).second)
            out.push_back(r);
    };
    const int n2 = 2 * g;
    for (int a = 0; a < n2; ++a)
        for (int b = 0; b < n2; ++b)
            for (int c = a + 1; c < n2; ++c)
                if (a != b && b != c)
                    add({mono({{b, 2}}), mono({{a, 1}, {c, 1}})});
    for (int a = 0; a < n2; ++a)
        for (int b = a + 1; b < n2; ++b)
            for (int c = 0; c < n2; ++c)
                for (int d = c + 1; d < n2; ++d)
                    if (c != a && c != b && d != a && d != b)
                        add({mono({{a, 1}, {b, 1}}), mono({{c, 1}, {d, 1}})});
    for (int n = 1; n <= g; n += 2) {
        // Subsets of size 2n, split into two halves of size n.
        std::vector<char> mask(n2, 0);
        std::fill(mask.begin(), mask.begin() + 2 * n, 1);
        do {
            std::vector<int> chosen;
            for (int i = 0; i < n2; ++i)
                if (mask[i])
                    chosen.push_back(i);
            std::vector<char> half(2 * n, 0);
            std::fill(half.begin(), half.begin() + n, 1);
            do {
                for (unsigned N = 1; N <= maxN; ++N) {
                    std::vector<std::pair<int, unsigned>> l, r;
                    for (int i = 0; i < 2 * n; ++i)
                        (half[i] ? l : r).emplace_back(chosen[i], N);
                    add({mono(l), mono(r)});
                }
            } while (std::prev_permutation(half.begin(), half.end()));
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return out;
}

Int galois_orbit_norm(const IntPoly &f, const Int &q, const Relation &r)
{
    NormEngine E(f, q);
    return E.norm(r);
}

bool ExclusionReport::bounds_hold() const
{
    for (const auto &n : norms) {
        if (n.value == 0)
            return false;
        if (log_abs_int(n.value) > n.log_bound + 1e-9)
            return false;
    }
    return true;
}

TensorLocus tensor_locus(int m, int n)
{
    if (m < 1 || n < 3 || n % 2 == 0)
        throw InputError("tensor locus needs m >= 1 and odd n >= 3");
    TensorLocus T;
    T.m = m;
    T.n = n;
    const int M = 2 * m, J = (n - 1) / 2;
    auto z = [&](int i) { return i; };
    auto x = [&](int i, int j) { return M + i * J + j; };
    auto y = [&](int i, int j) { return M + M * J + i * J + j; };
    for (int i = 0; i < M; ++i)
        T.variables.push_back("z" + std::to_string(i + 1));
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < J; ++j)
            T.variables.push_back("x" + std::to_string(i + 1) + std::to_string(j + 1));
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < J; ++j)
            T.variables.push_back("y" + std::to_string(i + 1) + std::to_string(j + 1));
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < J; ++j)
            T.binomials.emplace_back(mono({{x(i, j), 1}, {y(i, j), 1}}), mono({{z(i), 2}}));
    for (int i = 0; i < M; ++i)
        for (int k = i + 1; k < M; ++k)
            for (int j = 0; j < J; ++j) {
                T.binomials.emplace_back(mono({{z(k), 1}, {x(i, j), 1}}),
                                         mono({{z(i), 1}, {x(k, j), 1}}));
                T.binomials.emplace_back(mono({{z(k), 1}, {y(i, j), 1}}),
                                         mono({{z(i), 1}, {y(k, j), 1}}));
            }
    return T;
}

namespace {

Monomial substitute(const Monomial &m, const std::vector<int> &slot_to_label)
{
    std::vector<std::pair<int, unsigned>> f;
    for (const auto &[s, e] : m.factors)
        f.emplace_back(slot_to_label[s], e);
    return mono(std::move(f), m.coeff);
}

std::string binomial_text(const TensorLocus &T, const std::pair<Monomial, Monomial> &b)
{
    auto side = [&](const Monomial &m) {
        std::string s;
        for (const auto &[v, e] : m.factors) {
            if (!s.empty())
                s += "*";
            s += T.variables[v];
            if (e > 1)
                s += "^" + std::to_string(e);
        }
        return s;
    };
    return side(b.first) + " - " + side(b.second);
}

double group_order(int g)
{
    double o = std::ldexp(1.0, g);
    for (int k = 2; k <= g; ++k)
        o *= k;
    return o;
}

// Adds each relation once per W_g orbit.
struct NormCollector {
    NormEngine &E;
    ExclusionReport &rep;
    unsigned long trial_bound;
    std::set<std::string> seen;

    void add(const Relation &r)
    {
        if (identically_zero(r, E.g(), E.q()))
            return;
        std::string key = canonical_key(r, E.W());
        if (!seen.insert(key).second)
            return;
        Int v = E.norm(r);
        rep.norms.push_back({r.to_string(), v, log_weil_bound(r, E.g(), E.q())});
        absorb_factors(v, trial_bound, rep);
    }
};

} // namespace

ExclusionReport tensor_exclusion(NormEngine &E, int m, int n, unsigned long trial_bound)
{
    const int g = E.g();
    TensorLocus T = tensor_locus(m, n);
    if (static_cast<int>(T.variables.size()) != 2 * g)
        throw InputError("tensor shape (2m)*n must equal 2g");
    ExclusionReport rep;
    rep.kind = "tensor";
    rep.threshold_ln = group_order(g) * std::log(2 * E.q().get_d());
    for (const auto &b : T.binomials)
        rep.generators.push_back(binomial_text(T, b));

    std::vector<int> sigma(2 * g);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::set<Int> gcds;
    std::map<std::string, Int> by_key;
    do {
        Int G = 0;
        for (const auto &b : T.binomials) {
            Relation r{substitute(b.first, sigma), substitute(b.second, sigma)};
            if (identically_zero(r, g, E.q()))
                continue;
            std::string key = canonical_key(r, E.W());
            auto it = by_key.find(key);
            if (it == by_key.end()) {
                Int v = E.norm(r);
                rep.norms.push_back({r.to_string(), v, log_weil_bound(r, g, E.q())});
                it = by_key.emplace(key, v).first;
            }
            mpz_gcd(G.get_mpz_t(), G.get_mpz_t(), it->second.get_mpz_t());
        }
        if (G == 0)
            ++rep.unconstrained;
        else
            gcds.insert(G);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    rep.gcds.assign(gcds.begin(), gcds.end());
    for (const auto &G : rep.gcds)
        absorb_factors(G, trial_bound, rep);
    rep.notes.push_back("assignments: " + std::to_string(sigma.size()) + "! ; distinct orbit norms: " +
                        std::to_string(rep.norms.size()));
    return rep;
}

ExclusionReport lie_exclusion(NormEngine &E, unsigned long trial_bound)
{
    const int g = E.g();
    const Int &q = E.q();
    if (g < 3)
        throw InputError("lie exclusion needs g >= 3");
    ExclusionReport rep;
    rep.kind = "lie";
    const double lq = std::log(q.get_d());
    rep.threshold_ln =
        group_order(g) * (std::log(2.0) + 4 * (std::sqrt(6.0 * g) + 1) * lq);
    NormCollector col{E, rep, trial_bound, {}};

    // Squares relation mu_b^2 = mu_a mu_c on distinct labels.
    rep.generators.push_back("mu_b^2 - mu_a*mu_c");
    for (int a = 0; a < 2 * g; ++a)
        for (int b = 0; b < 2 * g; ++b)
            for (int c = a + 1; c < 2 * g; ++c)
                if (a != b && b != c)
                    col.add({mono({{b, 2}}), mono({{a, 1}, {c, 1}})});

    const int rmax = static_cast<int>(std::floor(std::sqrt(6.0 * g)));
    for (int r = 1; r <= rmax; ++r) {
        const unsigned e = 4 * (r + 1);
        rep.generators.push_back("mu_b^" + std::to_string(2 * e) + " - (mu_a*mu_c)^" +
                                 std::to_string(e));
        for (int a = 0; a < 2 * g; ++a)
            for (int b = 0; b < 2 * g; ++b)
                for (int c = a + 1; c < 2 * g; ++c)
                    if (a != b && b != c && a != 2 * g - 1 - c)
                        col.add({mono({{b, 2 * e}}), mono({{a, e}, {c, e}})});
        // a = pair(c): mu_b^{2e} = q^e, taken as an exact resultant.
        IntPoly h = IntPoly::monomial(1, 2 * e) - IntPoly::monomial(int_pow(q, e), 0);
        Int res = resultant(E.f(), h);
        double lb = 2.0 * g * (std::log(2.0) + e * lq);
        rep.norms.push_back({"Res(f, x^" + std::to_string(2 * e) + " - q^" + std::to_string(e) + ")",
                             res, lb});
        absorb_factors(res, trial_bound, rep);
    }
    return rep;
}

ExclusionReport minuscule_exclusion(NormEngine &E, int n, unsigned N, unsigned long trial_bound)
{
    const int g = E.g();
    if (n < 1 || n % 2 == 0 || 2 * n > 2 * g)
        throw InputError("minuscule exclusion needs odd n with 2n <= 2g");
    if (N < 1)
        throw InputError("minuscule exclusion needs N >= 1");
    ExclusionReport rep;
    rep.kind = "minuscule";
    rep.threshold_ln = group_order(g) * (std::log(2.0) + 0.5 * n * N * std::log(E.q().get_d()));
    rep.generators.push_back("prod_{i<=" + std::to_string(n) + "} mu_i^" + std::to_string(N) +
                             " - prod_{i>" + std::to_string(n) + "} mu_i^" + std::to_string(N));
    NormCollector col{E, rep, trial_bound, {}};
    std::vector<int> labels(2 * g);
    std::iota(labels.begin(), labels.end(), 0);
    // Ordered choices of 2n distinct labels.
    std::vector<int> pick(2 * n);
    std::vector<char> used(2 * g, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == 2 * n) {
            std::vector<std::pair<int, unsigned>> l, r;
            for (int i = 0; i < n; ++i)
                l.emplace_back(pick[i], N);
            for (int i = n; i < 2 * n; ++i)
                r.emplace_back(pick[i], N);
            col.add({mono(l), mono(r)});
            return;
        }
        for (int v = 0; v < 2 * g; ++v) {
            if (used[v])
                continue;
            // Each side is a set; keep it increasing.
            if (pos != 0 && pos != n && pick[pos - 1] > v)
                continue;
            used[v] = 1;
            pick[pos] = v;
            rec(pos + 1);
            used[v] = 0;
        }
    };
    rec(0);
    return rep;
}

ExclusionReport induced_exclusion(NormEngine &E, unsigned long trial_bound)
{
    const int g = E.g();
    ExclusionReport rep;
    rep.kind = "induced";
    // Need 2g = (2m)^t with t >= 3.
    int found_m = 0, found_t = 0;
    for (int m = 1; (2 * m) * (2 * m) * (2 * m) <= 2 * g; ++m) {
        long v = 1;
        int t = 0;
        while (v < 2 * g) {
            v *= 2 * m;
            ++t;
        }
        if (v == 2 * g && t >= 3) {
            found_m = m;
            found_t = t;
            break;
        }
    }
    if (!found_m) {
        rep.vacuous = true;
        rep.notes.push_back("2g = " + std::to_string(2 * g) + " is not (2m)^t with t >= 3");
        return rep;
    }
    const int lg = static_cast<int>(std::floor(std::log2(2.0 * g)));
    const unsigned amax = static_cast<unsigned>(std::ceil(xi_bound(lg)));
    rep.threshold_ln = group_order(g) * (std::log(2.0) + amax * std::log(E.q().get_d()));
    rep.notes.push_back("m = " + std::to_string(found_m) + ", t = " + std::to_string(found_t) +
                        ", exponents up to " + std::to_string(amax));
    NormCollector col{E, rep, trial_bound, {}};
    for (unsigned A = 1; A <= amax; ++A) {
        rep.generators.push_back("mu_a^" + std::to_string(A) + "*mu_b^" + std::to_string(A) +
                                 " - mu_c^" + std::to_string(A) + "*mu_d^" + std::to_string(A));
        for (int a = 0; a < 2 * g; ++a)
            for (int b = a + 1; b < 2 * g; ++b) {
                if (b == 2 * g - 1 - a)
                    continue;
                for (int c = 0; c < 2 * g; ++c)
                    for (int d = c + 1; d < 2 * g; ++d) {
                        if (c == a || c == b || d == a || d == b)
                            continue;
                        col.add({mono({{a, A}, {b, A}}), mono({{c, A}, {d, A}})});
                    }
            }
    }
    return rep;
}

F1F2 f1_f2(NormEngine &E, const std::vector<int> &x)
{
    const int g = E.g();
    if (x.size() != 6)
        throw InputError("f1_f2 needs six labels");
    std::vector<int> s = x;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end() || s.front() < 0 || s.back() >= 2 * g)
        throw InputError("f1_f2 labels must be distinct roots");
    Relation r1{mono({{x[0], 1}, {x[2], 1}}), mono({{x[1], 1}, {x[3], 1}})};
    Relation r2{mono({{x[0], 1}, {x[5], 1}}), mono({{x[1], 1}, {x[4], 1}})};
    Relation r3{mono({{x[1], 2}}), mono({{x[0], 1}, {x[2], 1}})};
    F1F2 out;
    out.f1 = abs(E.norm(r1)) + abs(E.norm(r2));
    out.f2 = abs(E.norm(r3));
    const double base = group_order(g) * std::log(2 * E.q().get_d());
    out.log_bound_f1 = std::log(2.0) + base;
    out.log_bound_f2 = base;
    return out;
}

} // namespace gic
