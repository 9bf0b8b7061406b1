/*
   Copyright 2026 The trisect authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TRISECT_POLYNOMIAL_HPP
#define TRISECT_POLYNOMIAL_HPP

#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trisect/context.hpp"

namespace trisect {

enum class Order { less, greater, similar };

/// Exponent vector; entry i is the exponent of variable i (0 = smallest).
using Mono = std::vector<std::uint32_t>;

/// Canonical term order: a precedes b when, scanning from the greatest
/// variable down, the first differing exponent of a is larger.  Map
/// iteration therefore runs leading term first, which is also the
/// printing order.
struct TermBefore {
    bool operator()(const Mono& a, const Mono& b) const {
        assert(a.size() == b.size());
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
};

inline bool mono_divides(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Multivariate polynomial over the context's field, stored in canonical
/// distributed form (no zero coefficients).  Values are immutable after
/// construction; all operations are pure.
template <class F>
class Polynomial {
public:
    using Elem = typename F::Elem;
    using TermMap = std::map<Mono, Elem, TermBefore>;

    Polynomial() = default;  // invalid placeholder for containers
    explicit Polynomial(ContextPtr<F> ctx) : ctx_(std::move(ctx)) {}

    static Polynomial constant(ContextPtr<F> ctx, Elem c) {
        Polynomial r(ctx);
        if (!ctx->field.is_zero(c))
            r.terms_.emplace(Mono(static_cast<std::size_t>(ctx->nvars()), 0), std::move(c));
        return r;
    }
    static Polynomial from_int(ContextPtr<F> ctx, long v) {
        return constant(ctx, ctx->field.from_int(v));
    }
    static Polynomial variable(ContextPtr<F> ctx, Var v, std::uint32_t exp = 1) {
        if (v < 0 || v >= ctx->nvars()) throw std::invalid_argument("variable out of range");
        Polynomial r(ctx);
        Mono m(static_cast<std::size_t>(ctx->nvars()), 0);
        m[static_cast<std::size_t>(v)] = exp;
        if (exp == 0) return constant(ctx, ctx->field.one());
        r.terms_.emplace(std::move(m), ctx->field.one());
        return r;
    }
    static Polynomial from_terms(ContextPtr<F> ctx, TermMap terms) {
        Polynomial r(ctx);
        for (auto& [m, c] : terms)
            if (!ctx->field.is_zero(c)) r.terms_.emplace(m, c);
        return r;
    }

    const ContextPtr<F>& ctx() const { return ctx_; }
    const F& field() const { return ctx_->field; }
    const TermMap& terms() const { return terms_; }
    int nvars() const { return ctx_->nvars(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        for (auto e : terms_.begin()->first)
            if (e != 0) return false;
        return true;
    }
    /// Value of a constant polynomial (zero polynomial gives 0).
    Elem constant_value() const {
        if (terms_.empty()) return ctx_->field.zero();
        assert(is_constant());
        return terms_.begin()->second;
    }
    bool is_one() const { return is_constant() && ctx_->field.equal(constant_value(), ctx_->field.one()); }

    /// Greatest variable appearing, or NO_VAR for constants.
    Var mvar() const {
        if (terms_.empty()) return NO_VAR;
        const Mono& lead = terms_.begin()->first;
        for (std::size_t i = lead.size(); i-- > 0;)
            if (lead[i] != 0) return static_cast<Var>(i);
        return NO_VAR;
    }

    int degree(Var v) const {
        if (v < 0 || v >= nvars()) return 0;
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(v)]);
        return static_cast<int>(d);
    }

    bool depends_on(Var v) const { return degree(v) > 0; }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // -- iteration helper for internal use
    TermMap& mutable_terms() { return terms_; }

private:
    ContextPtr<F> ctx_;
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Ring operations
// ---------------------------------------------------------------------------

namespace detail {
template <class F>
void require_same_ctx(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (!same_context(a.ctx(), b.ctx()))
        throw std::invalid_argument("polynomials from different contexts");
}
}  // namespace detail

template <class F>
Polynomial<F> operator+(const Polynomial<F>& a, const Polynomial<F>& b) {
    detail::require_same_ctx(a, b);
    const F& fld = a.field();
    auto terms = a.terms();
    for (const auto& [m, c] : b.terms()) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second = fld.add(it->second, c);
            if (fld.is_zero(it->second)) terms.erase(it);
        }
    }
    return Polynomial<F>::from_terms(a.ctx(), std::move(terms));
}

template <class F>
Polynomial<F> negate(const Polynomial<F>& a) {
    auto terms = a.terms();
    for (auto& [m, c] : terms) c = a.field().neg(c);
    return Polynomial<F>::from_terms(a.ctx(), std::move(terms));
}

template <class F>
Polynomial<F> operator-(const Polynomial<F>& a) { return negate(a); }

template <class F>
Polynomial<F> operator-(const Polynomial<F>& a, const Polynomial<F>& b) { return a + negate(b); }

template <class F>
Polynomial<F> scalar_mul(const Polynomial<F>& a, const typename F::Elem& s) {
    const F& fld = a.field();
    if (fld.is_zero(s)) return Polynomial<F>(a.ctx());
    auto terms = a.terms();
    for (auto& [m, c] : terms) c = fld.mul(c, s);
    return Polynomial<F>::from_terms(a.ctx(), std::move(terms));
}

template <class F>
Polynomial<F> operator*(const Polynomial<F>& a, const Polynomial<F>& b) {
    detail::require_same_ctx(a, b);
    const F& fld = a.field();
    typename Polynomial<F>::TermMap terms;
    Mono m(a.terms().empty() ? Mono() : Mono(a.terms().begin()->first.size(), 0));
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Mono prod(ma.size());
            for (std::size_t i = 0; i < ma.size(); ++i) prod[i] = ma[i] + mb[i];
            auto c = fld.mul(ca, cb);
            auto it = terms.find(prod);
            if (it == terms.end()) {
                terms.emplace(std::move(prod), std::move(c));
            } else {
                it->second = fld.add(it->second, c);
                if (fld.is_zero(it->second)) terms.erase(it);
            }
        }
    }
    (void)m;
    return Polynomial<F>::from_terms(a.ctx(), std::move(terms));
}

template <class F>
Polynomial<F> power(const Polynomial<F>& a, std::uint32_t e) {
    Polynomial<F> r = Polynomial<F>::constant(a.ctx(), a.field().one());
    Polynomial<F> base = a;
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

/// a * v^k
template <class F>
Polynomial<F> mul_var_pow(const Polynomial<F>& a, Var v, std::uint32_t k) {
    if (k == 0) return a;
    auto terms = a.terms();
    typename Polynomial<F>::TermMap shifted;
    for (auto& [m, c] : terms) {
        Mono mm = m;
        mm[static_cast<std::size_t>(v)] += k;
        shifted.emplace(std::move(mm), c);
    }
    return Polynomial<F>::from_terms(a.ctx(), std::move(shifted));
}

template <class F>
Polynomial<F> derivative(const Polynomial<F>& a, Var v) {
    if (v < 0 || v >= a.nvars()) throw std::invalid_argument("derivative: variable out of range");
    const F& fld = a.field();
    typename Polynomial<F>::TermMap terms;
    for (const auto& [m, c] : a.terms()) {
        std::uint32_t e = m[static_cast<std::size_t>(v)];
        if (e == 0) continue;
        Mono mm = m;
        mm[static_cast<std::size_t>(v)] = e - 1;
        auto ce = fld.mul(c, fld.from_int(static_cast<long>(e)));
        if (fld.is_zero(ce)) continue;
        auto it = terms.find(mm);
        if (it == terms.end())
            terms.emplace(std::move(mm), std::move(ce));
        else
            it->second = fld.add(it->second, ce);
    }
    return Polynomial<F>::from_terms(a.ctx(), std::move(terms));
}

/// Substitute values for a subset of the variables; remaining variables stay.
template <class F>
Polynomial<F> substitute(const Polynomial<F>& a, const std::map<Var, typename F::Elem>& point) {
    const F& fld = a.field();
    Polynomial<F> r(a.ctx());
    for (const auto& [m, c] : a.terms()) {
        auto coeff = c;
        Mono mm = m;
        for (const auto& [v, val] : point) {
            std::uint32_t e = mm[static_cast<std::size_t>(v)];
            if (e == 0) continue;
            auto factor = val;
            auto acc = fld.one();
            std::uint32_t k = e;
            while (k) {
                if (k & 1) acc = fld.mul(acc, factor);
                if (k >>= 1) factor = fld.mul(factor, factor);
            }
            coeff = fld.mul(coeff, acc);
            mm[static_cast<std::size_t>(v)] = 0;
        }
        r = r + Polynomial<F>::from_terms(a.ctx(), {{mm, coeff}});
    }
    return r;
}

/// Evaluate at a full point (point[i] is the value of variable i).
template <class F>
typename F::Elem eval_point(const Polynomial<F>& a, const std::vector<typename F::Elem>& point) {
    if (static_cast<int>(point.size()) != a.nvars())
        throw std::invalid_argument("evaluation point has wrong arity");
    const F& fld = a.field();
    auto total = fld.zero();
    for (const auto& [m, c] : a.terms()) {
        auto term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint32_t e = m[i];
            if (e == 0) continue;
            auto factor = point[i];
            auto acc = fld.one();
            while (e) {
                if (e & 1) acc = fld.mul(acc, factor);
                if (e >>= 1) factor = fld.mul(factor, factor);
            }
            term = fld.mul(term, acc);
        }
        total = fld.add(total, term);
    }
    return total;
}

/// Evaluate to a field element; every variable of a must be assigned.
template <class F>
typename F::Elem eval_elem(const Polynomial<F>& a, const std::map<Var, typename F::Elem>& point) {
    Polynomial<F> r = substitute(a, point);
    if (!r.is_constant())
        throw std::invalid_argument("evaluation point missing required variables");
    return r.constant_value();
}

// ---------------------------------------------------------------------------
// Main-variable attributes (§-style accessors)
// ---------------------------------------------------------------------------

/// Coefficient of v^k, viewed univariately in v.
template <class F>
Polynomial<F> coeff_of(const Polynomial<F>& a, Var v, std::uint32_t k) {
    typename Polynomial<F>::TermMap terms;
    for (const auto& [m, c] : a.terms()) {
        if (m[static_cast<std::size_t>(v)] != k) continue;
        Mono mm = m;
        mm[static_cast<std::size_t>(v)] = 0;
        terms.emplace(std::move(mm), c);
    }
    return Polynomial<F>::from_terms(a.ctx(), std::move(terms));
}

/// Coefficient list in v: index k holds the coefficient of v^k.
template <class F>
std::vector<Polynomial<F>> coeffs_in(const Polynomial<F>& a, Var v) {
    int d = a.degree(v);
    std::vector<Polynomial<F>> cs(static_cast<std::size_t>(d) + 1, Polynomial<F>(a.ctx()));
    for (const auto& [m, c] : a.terms()) {
        Mono mm = m;
        std::uint32_t k = mm[static_cast<std::size_t>(v)];
        mm[static_cast<std::size_t>(v)] = 0;
        auto& slot = cs[k];
        auto t = Polynomial<F>::from_terms(a.ctx(), {{mm, c}});
        slot = slot + t;
    }
    return cs;
}

namespace detail {
template <class F>
void require_nonconstant(const Polynomial<F>& p, const char* what) {
    if (p.mvar() == NO_VAR) throw std::domain_error(std::string(what) + ": no main variable");
}
}  // namespace detail

template <class F>
int mdeg(const Polynomial<F>& p) {
    detail::require_nonconstant(p, "mdeg");
    return p.degree(p.mvar());
}

/// Leading coefficient of p in v (p viewed univariately in v).
template <class F>
Polynomial<F> lc_in(const Polynomial<F>& p, Var v) {
    return coeff_of(p, v, static_cast<std::uint32_t>(p.degree(v)));
}

template <class F>
Polynomial<F> init(const Polynomial<F>& p) {
    detail::require_nonconstant(p, "init");
    return lc_in(p, p.mvar());
}

/// mvar(p)^mdeg(p) as a polynomial.
template <class F>
Polynomial<F> rank(const Polynomial<F>& p) {
    detail::require_nonconstant(p, "rank");
    return Polynomial<F>::variable(p.ctx(), p.mvar(), static_cast<std::uint32_t>(mdeg(p)));
}

template <class F>
Polynomial<F> head(const Polynomial<F>& p) {
    return init(p) * rank(p);
}

template <class F>
Polynomial<F> tail(const Polynomial<F>& p) {
    return p - head(p);
}

/// §2 rank preorder on polynomials: constants below nonconstants, then by
/// main variable, then by main degree; `similar` when neither is less.
template <class F>
Order rank_compare(const Polynomial<F>& p, const Polynomial<F>& q) {
    bool pc = p.mvar() == NO_VAR, qc = q.mvar() == NO_VAR;
    if (pc && qc) return Order::similar;
    if (pc) return Order::less;
    if (qc) return Order::greater;
    if (p.mvar() != q.mvar()) return p.mvar() < q.mvar() ? Order::less : Order::greater;
    int dp = mdeg(p), dq = mdeg(q);
    if (dp != dq) return dp < dq ? Order::less : Order::greater;
    return Order::similar;
}

// ---------------------------------------------------------------------------
// Pseudo-division
// ---------------------------------------------------------------------------

template <class F>
struct PseudoDivision {
    Polynomial<F> quo;
    Polynomial<F> rem;
    int e = 0;  // number of multiplications by init(q) performed
};

/// Pseudo-division of p by q w.r.t. v: init(q)^e * p = q * quo + rem with
/// deg(rem, v) < deg(q, v).  e is minimal under the division loop (one
/// multiplication per reduction step), not forced to deg(p)-deg(q)+1.
template <class F>
PseudoDivision<F> pseudo_divide(const Polynomial<F>& p, const Polynomial<F>& q, Var v) {
    detail::require_same_ctx(p, q);
    if (q.degree(v) == 0) throw std::domain_error("pseudo_divide: divisor constant in v");
    const int dq = q.degree(v);
    const Polynomial<F> lq = lc_in(q, v);

    PseudoDivision<F> out;
    out.quo = Polynomial<F>(p.ctx());
    out.rem = p;
    out.e = 0;
    const bool monic = lq.is_one();
    while (!out.rem.is_zero() && out.rem.degree(v) >= dq) {
        int dr = out.rem.degree(v);
        Polynomial<F> lr = lc_in(out.rem, v);
        Polynomial<F> shift = mul_var_pow(lr, v, static_cast<std::uint32_t>(dr - dq));
        if (monic) {  // no init multiplications needed, e stays 0
            out.quo = out.quo + shift;
            out.rem = out.rem - shift * q;
        } else {
            out.quo = lq * out.quo + shift;
            out.rem = lq * out.rem - shift * q;
            ++out.e;
        }
        assert(out.rem.is_zero() || out.rem.degree(v) < dr);
    }
#ifndef NDEBUG
    {
        Polynomial<F> lhs = power(lq, static_cast<std::uint32_t>(out.e)) * p;
        assert(lhs == q * out.quo + out.rem);
    }
#endif
    return out;
}

template <class F>
Polynomial<F> prem(const Polynomial<F>& p, const Polynomial<F>& q, Var v) {
    return pseudo_divide(p, q, v).rem;
}

/// Classical pseudo-division: the identity holds with the fixed exponent
/// d = deg(p,v) - deg(q,v) + 1 (0 when deg(p,v) < deg(q,v)).
template <class F>
PseudoDivision<F> pseudo_divide_classical(const Polynomial<F>& p, const Polynomial<F>& q, Var v) {
    PseudoDivision<F> out = pseudo_divide(p, q, v);
    int d = p.degree(v) - q.degree(v) + 1;
    if (d < 0) d = 0;
    if (out.e < d) {
        Polynomial<F> scale = power(lc_in(q, v), static_cast<std::uint32_t>(d - out.e));
        out.quo = scale * out.quo;
        out.rem = scale * out.rem;
        out.e = d;
    }
    return out;
}

template <class F>
Polynomial<F> prem_classical(const Polynomial<F>& p, const Polynomial<F>& q, Var v) {
    return pseudo_divide_classical(p, q, v).rem;
}

template <class F>
Polynomial<F> pquo_classical(const Polynomial<F>& p, const Polynomial<F>& q, Var v) {
    return pseudo_divide_classical(p, q, v).quo;
}

// ---------------------------------------------------------------------------
// Exact division, content normalization
// ---------------------------------------------------------------------------

/// Quotient a/b when b divides a exactly, nullopt otherwise.
template <class F>
std::optional<Polynomial<F>> exact_divide(const Polynomial<F>& a, const Polynomial<F>& b) {
    detail::require_same_ctx(a, b);
    if (b.is_zero()) throw std::domain_error("exact_divide by zero");
    const F& fld = a.field();
    Polynomial<F> q(a.ctx());
    Polynomial<F> r = a;
    const auto& ltb = *b.terms().begin();
    while (!r.is_zero()) {
        const auto& ltr = *r.terms().begin();
        if (!mono_divides(ltb.first, ltr.first)) return std::nullopt;
        Mono m(ltr.first.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ltr.first[i] - ltb.first[i];
        auto c = fld.div(ltr.second, ltb.second);
        Polynomial<F> t = Polynomial<F>::from_terms(a.ctx(), {{std::move(m), std::move(c)}});
        q = q + t;
        r = r - t * b;
    }
    return q;
}

namespace detail {
inline mpz_class rational_scale_num(const std::map<Mono, mpq_class, TermBefore>& terms) {
    mpz_class g = 0;
    for (const auto& [m, c] : terms) g = gcd(g, c.get_num());
    return g;
}
}  // namespace detail

/// Divide by the rational content (char 0: primitive integer coefficients,
/// positive leading coefficient; GF(p): monic).  The zero polynomial is
/// returned unchanged.  Varieties and regularity are invariant under this
/// scaling since the content is a unit of the field.
template <class F>
Polynomial<F> normalize_content(const Polynomial<F>& p);

template <>
inline Polynomial<RationalField> normalize_content(const Polynomial<RationalField>& p) {
    if (p.is_zero()) return p;
    mpz_class l = 1;
    for (const auto& [m, c] : p.terms()) l = lcm(l, c.get_den());
    mpz_class g = 0;
    for (const auto& [m, c] : p.terms()) g = gcd(g, mpz_class(c.get_num() * (l / c.get_den())));
    mpq_class scale(l, g);  // multiply by l/g
    scale.canonicalize();
    if (p.terms().begin()->second < 0) scale = -scale;
    return scalar_mul(p, scale);
}

template <>
inline Polynomial<PrimeField> normalize_content(const Polynomial<PrimeField>& p) {
    if (p.is_zero()) return p;
    const auto& fld = p.field();
    return scalar_mul(p, fld.inv(p.terms().begin()->second));
}

// ---------------------------------------------------------------------------
// Total order for canonical sorting, printing
// ---------------------------------------------------------------------------

/// Deterministic total order on polynomials of one context (term maps
/// compared lexicographically in canonical term order).
template <class F>
int poly_cmp(const Polynomial<F>& a, const Polynomial<F>& b) {
    const F& fld = a.field();
    auto ia = a.terms().begin(), ib = b.terms().begin();
    TermBefore before;
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->first != ib->first) return before(ia->first, ib->first) ? 1 : -1;
        int c = fld.cmp(ia->second, ib->second);
        if (c != 0) return c;
        ++ia;
        ++ib;
    }
    if (ia != a.terms().end()) return 1;
    if (ib != b.terms().end()) return -1;
    return 0;
}

template <class F>
std::string to_string(const Polynomial<F>& p) {
    if (p.is_zero()) return "0";
    const F& fld = p.field();
    const auto& names = p.ctx()->vars;
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        auto coeff = c;
        bool negative = fld.cmp(coeff, fld.zero()) < 0;
        if (first) {
            if (negative) {
                os << "-";
                coeff = fld.neg(coeff);
            }
        } else {
            os << (negative ? " - " : " + ");
            if (negative) coeff = fld.neg(coeff);
        }
        first = false;
        bool has_vars = false;
        for (auto e : m)
            if (e != 0) has_vars = true;
        bool unit = fld.equal(coeff, fld.one());
        if (!has_vars || !unit) os << fld.str(coeff);
        if (has_vars) {
            if (!unit) os << "*";
            bool firstv = true;
            for (std::size_t i = m.size(); i-- > 0;) {
                if (m[i] == 0) continue;
                if (!firstv) os << "*";
                firstv = false;
                os << names.name(static_cast<Var>(i));
                if (m[i] > 1) os << "^" << m[i];
            }
        }
    }
    return os.str();
}

}  // namespace trisect

#endif
