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

#ifndef TRISECT_SUBRESULTANT_HPP
#define TRISECT_SUBRESULTANT_HPP

#include <cassert>
#include <stdexcept>
#include <vector>

#include "trisect/polynomial.hpp"

namespace trisect {

// ---------------------------------------------------------------------------
// Determinants and determinant polynomials
// ---------------------------------------------------------------------------

/// Exact determinant of a square polynomial matrix (fraction-free Bareiss
/// elimination; every division is exact in the ring).
template <class F>
Polynomial<F> poly_det(std::vector<std::vector<Polynomial<F>>> m, const ContextPtr<F>& ctx) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial<F>::constant(ctx, ctx->field.one());
    Polynomial<F> prev = Polynomial<F>::constant(ctx, ctx->field.one());
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Polynomial<F>(ctx);  // singular
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial<F> num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = exact_divide(num, prev);
                assert(q.has_value());
                m[i][j] = std::move(*q);
            }
            m[i][k] = Polynomial<F>(ctx);
        }
        prev = m[k][k];
    }
    return sign < 0 ? negate(m[n - 1][n - 1]) : m[n - 1][n - 1];
}

/// Determinant polynomial of a k x l matrix (k <= l):
/// det(M_k) v^(l-k) + det(M_{k+1}) v^(l-k-1) + ... + det(M_l),
/// where M_i consists of the first k-1 columns of M plus column i.
template <class F>
Polynomial<F> determinant_polynomial(const std::vector<std::vector<Polynomial<F>>>& m, Var v,
                                     const ContextPtr<F>& ctx) {
    const std::size_t k = m.size();
    if (k == 0) throw std::invalid_argument("determinant_polynomial: empty matrix");
    const std::size_t l = m[0].size();
    for (const auto& row : m)
        if (row.size() != l) throw std::invalid_argument("determinant_polynomial: ragged matrix");
    if (k > l) throw std::invalid_argument("determinant_polynomial: more rows than columns");
    Polynomial<F> out(ctx);
    for (std::size_t i = k - 1; i < l; ++i) {
        std::vector<std::vector<Polynomial<F>>> sq(k);
        for (std::size_t r = 0; r < k; ++r) {
            sq[r].reserve(k);
            for (std::size_t c = 0; c + 1 < k; ++c) sq[r].push_back(m[r][c]);
            sq[r].push_back(m[r][i]);
        }
        Polynomial<F> d = poly_det(std::move(sq), ctx);
        out = out + mul_var_pow(d, v, static_cast<std::uint32_t>(l - 1 - i));
    }
    return out;
}

/// Coefficient matrix of rows of polynomials viewed in v (column j holds the
/// coefficient of v^(l-1-j), l = 1 + max degree), then dpol of it.
template <class F>
Polynomial<F> determinant_polynomial_of(const std::vector<Polynomial<F>>& rows, Var v) {
    if (rows.empty()) throw std::invalid_argument("determinant_polynomial: no rows");
    const auto& ctx = rows[0].ctx();
    int maxdeg = 0;
    for (const auto& r : rows) maxdeg = std::max(maxdeg, r.degree(v));
    const std::size_t l = static_cast<std::size_t>(maxdeg) + 1;
    std::vector<std::vector<Polynomial<F>>> m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        m[r].reserve(l);
        for (std::size_t c = 0; c < l; ++c)
            m[r].push_back(coeff_of(rows[r], v, static_cast<std::uint32_t>(l - 1 - c)));
    }
    return determinant_polynomial(m, v, ctx);
}

// ---------------------------------------------------------------------------
// Subresultant chains
// ---------------------------------------------------------------------------

/// The chain S_0..S_{lambda+1} of subresultants of p and q w.r.t. v, with
/// principal coefficients s_i.  Entries at lambda and lambda+1 follow the
/// convention: for deg(p,v) >= deg(q,v) they are q and p (and s_lambda,
/// s_{lambda+1} their leading coefficients in v), symmetrically otherwise.
template <class F>
struct SubresultantChain {
    Var v = NO_VAR;
    Polynomial<F> p, q;
    int lambda = 0;
    std::vector<Polynomial<F>> entries;     // S_0 .. S_{lambda+1}
    std::vector<Polynomial<F>> principals;  // s_0 .. s_{lambda+1}

    const Polynomial<F>& entry(int i) const { return entries.at(static_cast<std::size_t>(i)); }
    const Polynomial<F>& principal(int i) const { return principals.at(static_cast<std::size_t>(i)); }
    const Polynomial<F>& resultant_entry() const { return entries[0]; }
};

namespace detail {

/// Classical subresultant PRS for deg(p,v) >= deg(q,v) >= 1; fills
/// entries[0..lambda-1] of the chain (lambda = deg(q,v)).
template <class F>
void subres_prs(const Polynomial<F>& p, const Polynomial<F>& q, Var v,
                std::vector<Polynomial<F>>& entries) {
    const auto& ctx = p.ctx();
    const int m = p.degree(v), n = q.degree(v);
    assert(m >= n && n >= 1);

    // s tracks the principal coefficient of the chain at the current level
    // (lc(q)^(m-n) at level n, by the extended convention).
    Polynomial<F> s = power(lc_in(q, v), static_cast<std::uint32_t>(m - n));
    Polynomial<F> A = q;
    Polynomial<F> B = prem_classical(p, negate(q), v);
    int d = n;
    while (true) {
        if (d - 1 < static_cast<int>(entries.size())) entries[static_cast<std::size_t>(d - 1)] = B;
        if (B.is_zero()) break;
        const int e = B.degree(v);
        Polynomial<F> C = B;
        if (e < d - 1) {
            // defective step: S_e = lc(B)^(d-1-e) B / s^(d-1-e); S_j = 0 between
            Polynomial<F> num = power(lc_in(B, v), static_cast<std::uint32_t>(d - 1 - e)) * B;
            auto div = exact_divide(num, power(s, static_cast<std::uint32_t>(d - 1 - e)));
            assert(div.has_value());
            C = std::move(*div);
            if (e < static_cast<int>(entries.size())) entries[static_cast<std::size_t>(e)] = C;
        }
        if (e == 0) break;
        Polynomial<F> den = power(s, static_cast<std::uint32_t>(d - e)) * lc_in(A, v);
        auto nextB = exact_divide(prem_classical(A, negate(B), v), den);
        assert(nextB.has_value());
        A = std::move(C);
        s = lc_in(A, v);
        d = e;
        B = std::move(*nextB);
    }
    (void)ctx;
}

template <class F>
void fill_top_entries(SubresultantChain<F>& ch) {
    const int m = ch.p.degree(ch.v), n = ch.q.degree(ch.v);
    const Polynomial<F>& low = (m >= n) ? ch.q : ch.p;
    const Polynomial<F>& high = (m >= n) ? ch.p : ch.q;
    ch.entries[static_cast<std::size_t>(ch.lambda)] = low;
    ch.entries[static_cast<std::size_t>(ch.lambda) + 1] = high;
    for (int i = 0; i < ch.lambda; ++i)
        ch.principals[static_cast<std::size_t>(i)] =
            coeff_of(ch.entries[static_cast<std::size_t>(i)], ch.v, static_cast<std::uint32_t>(i));
    ch.principals[static_cast<std::size_t>(ch.lambda)] = lc_in(low, ch.v);
    ch.principals[static_cast<std::size_t>(ch.lambda) + 1] = lc_in(high, ch.v);
}

}  // namespace detail

/// Optimized chain via the classical subresultant PRS recurrence.  Accepts
/// any p, q with positive degree in v (coefficients may involve higher
/// variables; the coefficient ring is everything but v).
template <class F>
SubresultantChain<F> subresultant_chain_any(const Polynomial<F>& p, const Polynomial<F>& q, Var v) {
    detail::require_same_ctx(p, q);
    const int m = p.degree(v), n = q.degree(v);
    if (m < 1 || n < 1) throw std::domain_error("subresultant_chain: inputs must have positive degree in v");
    SubresultantChain<F> ch;
    ch.v = v;
    ch.p = p;
    ch.q = q;
    ch.lambda = std::min(m, n);
    ch.entries.assign(static_cast<std::size_t>(ch.lambda) + 2, Polynomial<F>(p.ctx()));
    ch.principals.assign(static_cast<std::size_t>(ch.lambda) + 2, Polynomial<F>(p.ctx()));
    std::vector<Polynomial<F>> low(static_cast<std::size_t>(ch.lambda), Polynomial<F>(p.ctx()));
    if (m >= n) {
        detail::subres_prs(p, q, v, low);
        for (int i = 0; i < ch.lambda; ++i) ch.entries[static_cast<std::size_t>(i)] = low[static_cast<std::size_t>(i)];
    } else {
        detail::subres_prs(q, p, v, low);
        // block swap of the defining matrix: S_i(p,q) = (-1)^((m-i)(n-i)) S_i(q,p)
        for (int i = 0; i < ch.lambda; ++i) {
            bool flip = ((static_cast<long>(m - i) * (n - i)) % 2) != 0;
            ch.entries[static_cast<std::size_t>(i)] =
                flip ? negate(low[static_cast<std::size_t>(i)]) : low[static_cast<std::size_t>(i)];
        }
    }
    detail::fill_top_entries(ch);
    return ch;
}

/// Public operation: both main variables must equal v.
template <class F>
SubresultantChain<F> subresultant_chain(const Polynomial<F>& p, const Polynomial<F>& q, Var v) {
    if (p.mvar() != v || q.mvar() != v)
        throw std::domain_error("subresultant_chain: main variables must both equal v");
    return subresultant_chain_any(p, q, v);
}

/// Reference path: every entry straight from the determinant-polynomial
/// definition (stacked shifted rows), exact Bareiss determinants.
template <class F>
SubresultantChain<F> subresultant_chain_naive(const Polynomial<F>& p, const Polynomial<F>& q, Var v) {
    detail::require_same_ctx(p, q);
    const int m = p.degree(v), n = q.degree(v);
    if (m < 1 || n < 1) throw std::domain_error("subresultant_chain: inputs must have positive degree in v");
    SubresultantChain<F> ch;
    ch.v = v;
    ch.p = p;
    ch.q = q;
    ch.lambda = std::min(m, n);
    ch.entries.assign(static_cast<std::size_t>(ch.lambda) + 2, Polynomial<F>(p.ctx()));
    ch.principals.assign(static_cast<std::size_t>(ch.lambda) + 2, Polynomial<F>(p.ctx()));
    for (int i = 0; i < ch.lambda; ++i) {
        std::vector<Polynomial<F>> rows;
        rows.reserve(static_cast<std::size_t>(m + n - 2 * i));
        for (int s = n - 1 - i; s >= 0; --s) rows.push_back(mul_var_pow(p, v, static_cast<std::uint32_t>(s)));
        for (int s = m - 1 - i; s >= 0; --s) rows.push_back(mul_var_pow(q, v, static_cast<std::uint32_t>(s)));
        ch.entries[static_cast<std::size_t>(i)] = determinant_polynomial_of(rows, v);
    }
    detail::fill_top_entries(ch);
    return ch;
}

/// res(p, q, v): p itself when deg(p, v) = 0, otherwise S_0 of the chain
/// (the Sylvester determinant).  q must be nonconstant with mvar(q) = v.
template <class F>
Polynomial<F> resultant(const Polynomial<F>& p, const Polynomial<F>& q, Var v) {
    if (q.mvar() != v) throw std::domain_error("resultant: q must have main variable v");
    if (p.degree(v) == 0) return p;
    return subresultant_chain_any(p, q, v).resultant_entry();
}

// ---------------------------------------------------------------------------
// Squarefree part
// ---------------------------------------------------------------------------

namespace detail {
template <class F>
void require_squarefree_char(const F& fld, int main_degree) {
    std::uint64_t c = fld.characteristic();
    if (c != 0 && c <= static_cast<std::uint64_t>(main_degree))
        throw std::domain_error("squarefree part requires characteristic 0 or > main degree");
}
}  // namespace detail

/// Squarefree part w.r.t. the main variable: pquo(p, g) for g the lowest
/// subresultant of p and dp/dv with nonvanishing principal coefficient (a
/// gcd over the fraction field of the lower variables), with the systematic
/// init(g)-power content stripped and the rational content normalized.
template <class F>
Polynomial<F> squarefree_part(const Polynomial<F>& p) {
    Var v = p.mvar();
    if (v == NO_VAR) throw std::domain_error("squarefree_part: constant input");
    const int m = mdeg(p);
    detail::require_squarefree_char(p.field(), m);
    if (m == 1) return p;

    Polynomial<F> dp = derivative(p, v);
    SubresultantChain<F> ch = subresultant_chain_any(p, dp, v);
    int k = 0;
    while (k <= ch.lambda && ch.principal(k).is_zero()) ++k;
    assert(k <= ch.lambda);  // s_lambda = mdeg(p) * init(p), nonzero here
    if (k == 0) return p;    // already squarefree

    const Polynomial<F>& g = ch.entry(k);
    Polynomial<F> out = pquo_classical(p, g, v);
    Polynomial<F> ig = lc_in(g, v);
    if (!ig.is_constant()) {
        while (true) {
            auto d = exact_divide(out, ig);
            if (!d) break;
            out = std::move(*d);
        }
    }
    return normalize_content(out);
}

}  // namespace trisect

#endif
