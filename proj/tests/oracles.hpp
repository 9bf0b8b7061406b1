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

// Test-side oracles, kept independent of the implementation paths they
// check: cofactor-expansion determinants (vs Bareiss), the Sylvester matrix
// (vs the subresultant recurrence), Euclidean gcd over GF(p) (vs the
// specialization theory).

#ifndef TRISECT_TEST_ORACLES_HPP
#define TRISECT_TEST_ORACLES_HPP

#include "trisect/subresultant.hpp"
#include "trisect/verify.hpp"

namespace oracle {

using trisect::Polynomial;
using trisect::Var;

/// Plain cofactor-expansion determinant (exponential; keep matrices small).
template <class F>
Polynomial<F> cofactor_det(const std::vector<std::vector<Polynomial<F>>>& m,
                           const trisect::ContextPtr<F>& ctx) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial<F>::constant(ctx, ctx->field.one());
    if (n == 1) return m[0][0];
    Polynomial<F> acc(ctx);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial<F>>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial<F>> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial<F> term = m[0][j] * cofactor_det(minor, ctx);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Sylvester matrix of (f, g) w.r.t. v, f-rows on top; its determinant is
/// the resultant in the convention used throughout.
template <class F>
std::vector<std::vector<Polynomial<F>>> sylvester_matrix(const Polynomial<F>& f,
                                                         const Polynomial<F>& g, Var v) {
    const int m = f.degree(v), n = g.degree(v);
    const int l = m + n;
    std::vector<std::vector<Polynomial<F>>> rows;
    auto add_rows = [&](const Polynomial<F>& p, int count) {
        for (int i = count - 1; i >= 0; --i) {
            Polynomial<F> shifted = mul_var_pow(p, v, static_cast<std::uint32_t>(i));
            std::vector<Polynomial<F>> row;
            row.reserve(static_cast<std::size_t>(l));
            for (int c = 0; c < l; ++c)
                row.push_back(coeff_of(shifted, v, static_cast<std::uint32_t>(l - 1 - c)));
            rows.push_back(std::move(row));
        }
    };
    add_rows(f, n);
    add_rows(g, m);
    return rows;
}

template <class F>
Polynomial<F> sylvester_resultant(const Polynomial<F>& f, const Polynomial<F>& g, Var v) {
    return cofactor_det(sylvester_matrix(f, g, v), f.ctx());
}

/// Monic Euclidean gcd of univariate polynomials over GF(p); gcd(0,0) = 0.
inline Polynomial<trisect::PrimeField> uni_gcd(Polynomial<trisect::PrimeField> a,
                                               Polynomial<trisect::PrimeField> b, Var v) {
    using trisect::normalize_content;
    while (!b.is_zero()) {
        if (b.degree(v) == 0) return normalize_content(b);  // unit
        auto r = trisect::pseudo_divide(a, b, v).rem;  // unit init: same remainder up to scale
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : normalize_content(a);
}

/// Equality up to a nonzero scalar of the coefficient field.
template <class F>
bool equal_up_to_scalar(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.terms().size() != b.terms().size()) return false;
    const auto& fld = a.field();
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    auto scale = fld.div(ib->second, ia->second);
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!fld.equal(fld.mul(ia->second, scale), ib->second)) return false;
    }
    return true;
}

}  // namespace oracle

#endif
