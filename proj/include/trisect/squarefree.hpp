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

#ifndef TRISECT_SQUAREFREE_HPP
#define TRISECT_SQUAREFREE_HPP

#include "trisect/decompose.hpp"

namespace trisect {

/// Attaching phase of the squarefree construction with a precomputed chain
/// of p and its main-variable derivative: first regularize the resultant,
/// then split along regular GCDs of (p, p'), emitting pquo(p, g) on the
/// dimension-preserving branches.
template <class F>
Split<F> squarefree_with_src_impl(Engine<F>& eng, const Polynomial<F>& p, Var xi,
                                  const SubresultantChain<F>& src, const RegularChain<F>& t,
                                  const Process<F>* parent) {
    Split<F> out;
    std::vector<RegularChain<F>> work;
    Polynomial<F> r = normalize_content(src.resultant_entry());

    for (auto& [f, c] : eng.regularize_impl(r, t, parent)) {
        if (!f.is_zero()) {
            out.push_back(c.extended(p, ChainCert::squarefree_site));
            continue;
        }
        if (c.dim() == t.dim()) {
            work.push_back(c);
        } else {
            for (auto& [f2, d] : eng.regularize_impl(init(p), c, parent))
                if (!f2.is_zero()) work.push_back(d);
        }
    }

    const Polynomial<F>& dp = src.q;
    while (!work.empty()) {
        RegularChain<F> c = std::move(work.back());
        work.pop_back();
        for (auto& [g, d] : eng.regular_gcd_impl(p, dp, xi, src, c, parent)) {
            if (d.dim() == c.dim()) {
                out.push_back(d.extended(pquo_classical(p, g, xi), ChainCert::squarefree_site));
                for (const auto& e : eng.intersect_impl(init(g), d, std::nullopt, parent))
                    for (auto& [f3, fc] : eng.regularize_impl(init(p), e, parent))
                        if (!f3.is_zero()) work.push_back(fc);
            } else {
                for (auto& [f4, e] : eng.regularize_impl(init(p), d, parent))
                    if (!f4.is_zero()) work.push_back(e);
            }
        }
    }
    return out;
}

/// Squarefree attachment of p above the squarefree chain t (t u p must be a
/// regular chain): degree-1 polynomials attach directly, everything else
/// goes through the gcd-driven splitting.
template <class F>
Split<F> squarefree_attach_impl(Engine<F>& eng, const Polynomial<F>& p, Var xi,
                                const RegularChain<F>& t, const Process<F>* parent) {
    Polynomial<F> sp = squarefree_part(p);
    if (mdeg(sp) == 1) return {t.extended(sp, ChainCert::squarefree_site)};
    SubresultantChain<F> src = subresultant_chain_any(sp, derivative(sp, xi), xi);
    return squarefree_with_src_impl(eng, sp, xi, src, t, parent);
}

template <class F>
Split<F> squarefree_attach(Engine<F>& eng, const Polynomial<F>& p, Var xi, const RegularChain<F>& t) {
    if (p.mvar() != xi) throw std::invalid_argument("squarefree_attach: mvar(p) must be xi");
    if (!t.empty() && t.max_mvar() >= xi)
        throw std::invalid_argument("squarefree_attach: chain must live below xi");
    Split<F> out = squarefree_attach_impl(eng, p, xi, t, static_cast<const Process<F>*>(nullptr));
    canonical_sort(out);
    return out;
}

template <class F>
Split<F> squarefree_with_src(Engine<F>& eng, const Polynomial<F>& p, Var xi,
                             const SubresultantChain<F>& src, const RegularChain<F>& t) {
    Split<F> out = squarefree_with_src_impl(eng, p, xi, src, t, static_cast<const Process<F>*>(nullptr));
    canonical_sort(out);
    return out;
}

/// Post-processing strategy: make a whole regular chain squarefree,
/// variable by variable, with CleanChain between levels.
template <class F>
Split<F> squarefree_chain(Engine<F>& eng, const RegularChain<F>& t) {
    const auto& ctx = t.ctx();
    RegularChain<F> reduced(ctx);
    for (const auto& p : t.polys())
        reduced = reduced.extended(squarefree_part(p), ChainCert::squarefree_site);

    std::map<Var, SubresultantChain<F>> srcs;
    for (const auto& p : reduced.polys())
        if (mdeg(p) > 1)
            srcs.emplace(p.mvar(), subresultant_chain_any(p, derivative(p, p.mvar()), p.mvar()));

    Split<F> cur{RegularChain<F>(ctx)};
    const int n = ctx->nvars();
    for (Var xi = 0; xi < n; ++xi) {
        Split<F> next;
        for (const auto& c : cur) {
            if (!reduced.has_mvar(xi)) {
                for (auto& d : eng.clean_chain_impl(c, reduced, xi + 1, std::nullopt, nullptr))
                    next.push_back(std::move(d));
            } else if (mdeg(reduced.poly_of(xi)) == 1) {
                RegularChain<F> b = c.extended(reduced.poly_of(xi), ChainCert::squarefree_site);
                for (auto& d : eng.clean_chain_impl(b, reduced, xi + 1, std::nullopt, nullptr))
                    next.push_back(std::move(d));
            } else {
                for (const auto& d :
                     squarefree_with_src_impl(eng, reduced.poly_of(xi), xi, srcs.at(xi), c, static_cast<const Process<F>*>(nullptr)))
                    for (auto& e : eng.clean_chain_impl(d, reduced, xi + 1, std::nullopt, nullptr))
                        next.push_back(std::move(e));
            }
        }
        cur = std::move(next);
    }
    canonical_sort(cur);
    return cur;
}

}  // namespace trisect

#endif
