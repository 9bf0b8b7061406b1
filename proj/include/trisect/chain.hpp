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

#ifndef TRISECT_CHAIN_HPP
#define TRISECT_CHAIN_HPP

#include <algorithm>
#include <cassert>
#include <memory>
#include <vector>

#include "trisect/subresultant.hpp"

namespace trisect {

/// Triangular set: nonconstant polynomials with pairwise distinct main
/// variables, kept sorted by increasing main variable.  Persistent value:
/// extending shares the lower part, so splits share prefixes for free.
template <class F>
class TriangularSet {
    struct Node {
        Polynomial<F> poly;
        std::shared_ptr<const Node> below;
        int height;
    };

public:
    TriangularSet() = default;
    explicit TriangularSet(ContextPtr<F> ctx) : ctx_(std::move(ctx)) {}

    const ContextPtr<F>& ctx() const { return ctx_; }
    bool empty() const { return top_ == nullptr; }
    int height() const { return top_ ? top_->height : 0; }
    int dim() const { return ctx_->nvars() - height(); }

    /// Greatest main variable, NO_VAR when empty.
    Var max_mvar() const { return top_ ? top_->poly.mvar() : NO_VAR; }
    const Polynomial<F>& top() const {
        assert(top_);
        return top_->poly;
    }

    /// New set with p attached above; mvar(p) must exceed every mvar here.
    TriangularSet extended(const Polynomial<F>& p) const {
        assert(p.mvar() != NO_VAR);
        assert(empty() || p.mvar() > max_mvar());
        TriangularSet t(ctx_);
        t.top_ = std::make_shared<const Node>(Node{p, top_, height() + 1});
        return t;
    }

    bool has_mvar(Var v) const {
        for (const Node* n = top_.get(); n; n = n->below.get()) {
            Var m = n->poly.mvar();
            if (m == v) return true;
            if (m < v) return false;
        }
        return false;
    }

    /// T_v; call only when has_mvar(v).
    const Polynomial<F>& poly_of(Var v) const {
        for (const Node* n = top_.get(); n; n = n->below.get())
            if (n->poly.mvar() == v) return n->poly;
        throw std::invalid_argument("poly_of: variable not algebraic in this set");
    }

    /// T_{<v}: shares structure with this set.
    TriangularSet lower_than(Var v) const {
        TriangularSet t(ctx_);
        auto n = top_;
        while (n && n->poly.mvar() >= v) n = n->below;
        t.top_ = n;
        return t;
    }

    /// T_{>=v}, smallest main variable first.
    std::vector<Polynomial<F>> upper_from(Var v) const {
        std::vector<Polynomial<F>> out;
        for (const Node* n = top_.get(); n && n->poly.mvar() >= v; n = n->below.get())
            out.push_back(n->poly);
        std::reverse(out.begin(), out.end());
        return out;
    }

    /// All polynomials, smallest main variable first.
    std::vector<Polynomial<F>> polys() const { return upper_from(0); }

    std::vector<Var> mvars() const {
        std::vector<Var> out;
        for (const Node* n = top_.get(); n; n = n->below.get()) out.push_back(n->poly.mvar());
        std::reverse(out.begin(), out.end());
        return out;
    }

    /// Product of the initials h_T (1 for the empty set).
    Polynomial<F> initials_product() const {
        Polynomial<F> h = Polynomial<F>::constant(ctx_, ctx_->field.one());
        for (const Node* n = top_.get(); n; n = n->below.get()) h = h * init(n->poly);
        return h;
    }

    bool same_polys(const TriangularSet& o) const {
        const Node *a = top_.get(), *b = o.top_.get();
        while (a && b) {
            if (a == b) return true;  // shared suffix
            if (a->poly != b->poly) return false;
            a = a->below.get();
            b = b->below.get();
        }
        return a == nullptr && b == nullptr;
    }

private:
    ContextPtr<F> ctx_;
    std::shared_ptr<const Node> top_;
};

/// How a regular chain acquired the regular-chain property.
enum class ChainCert {
    empty,           // the empty chain
    init_regular,    // initial regularized by Regularize/CleanChain
    gcd_branch,      // leading coefficient regular by the regular-GCD theorem
    rebuilt,         // re-attachment of existing chain polynomials (Extend)
    squarefree_site  // built by the squarefree attachment routines
};

/// Triangular set satisfying the regular-chain property by construction:
/// each initial regular w.r.t. the saturated ideal of the part below it.
template <class F>
class RegularChain : public TriangularSet<F> {
public:
    RegularChain() = default;
    explicit RegularChain(ContextPtr<F> ctx) : TriangularSet<F>(std::move(ctx)), cert_(ChainCert::empty) {}

    RegularChain extended(const Polynomial<F>& p, ChainCert cert) const {
        RegularChain c;
        static_cast<TriangularSet<F>&>(c) = TriangularSet<F>::extended(p);
        c.cert_ = cert;
        return c;
    }

    RegularChain lower_than(Var v) const {
        RegularChain c;
        static_cast<TriangularSet<F>&>(c) = TriangularSet<F>::lower_than(v);
        c.cert_ = this->empty() ? ChainCert::empty : cert_;
        return c;
    }

    ChainCert cert() const { return cert_; }

private:
    ChainCert cert_ = ChainCert::empty;
};

template <class F>
using Split = std::vector<RegularChain<F>>;

// ---------------------------------------------------------------------------
// prem / iterated resultant machinery
// ---------------------------------------------------------------------------

/// Iterated pseudo-remainder by the chain polynomials, greatest main
/// variable first.  Zero iff p lies in sat(T) when T is a regular chain.
template <class F>
Polynomial<F> prem_chain(const Polynomial<F>& p, const TriangularSet<F>& t) {
    Polynomial<F> r = p;
    for (const auto& tv : [&] {
             auto v = t.polys();
             std::reverse(v.begin(), v.end());
             return v;
         }()) {
        if (r.is_zero()) return r;
        if (r.degree(tv.mvar()) < mdeg(tv)) continue;
        r = prem(r, tv, tv.mvar());
    }
    return r;
}

/// res(p, T) per the recursion res(p, T) = res(res(p, T_v, v), T_{<v}),
/// with the degree-zero convention res(p, q, v) = p when deg(p, v) = 0.
template <class F>
Polynomial<F> iterated_resultant(const Polynomial<F>& p, const TriangularSet<F>& t) {
    Polynomial<F> r = p;
    auto polys = t.polys();
    for (auto it = polys.rbegin(); it != polys.rend(); ++it) r = resultant(r, *it, it->mvar());
    return r;
}

/// p regular (neither zero nor a zerodivisor) modulo sat(T), decided by the
/// iterated resultant criterion.
template <class F>
bool is_regular(const Polynomial<F>& p, const RegularChain<F>& t) {
    return !iterated_resultant(p, t).is_zero();
}

// ---------------------------------------------------------------------------
// Rank orders
// ---------------------------------------------------------------------------

/// §2 rank order on triangular sets.  Convention for the empty chain: the
/// empty chain precedes every nonempty one (diagnostics only; see notes in
/// process_compare).
template <class F>
Order chain_rank_compare(const TriangularSet<F>& t, const TriangularSet<F>& s) {
    auto tp = t.polys();
    auto sp = s.polys();
    if (tp.empty() && sp.empty()) return Order::similar;
    if (tp.empty()) return Order::less;
    if (sp.empty()) return Order::greater;
    std::size_t i = 0, j = 0;
    while (i < tp.size() && j < sp.size()) {
        Var vt = tp[i].mvar(), vs = sp[j].mvar();
        if (vt == vs) {
            int dt = mdeg(tp[i]), ds = mdeg(sp[j]);
            if (dt != ds) return dt < ds ? Order::less : Order::greater;
            ++i;
            ++j;
        } else if (vt < vs) {
            return Order::less;  // t algebraic at vt with equal lower ranks
        } else {
            return Order::greater;
        }
    }
    if (i < tp.size()) return Order::less;
    if (j < sp.size()) return Order::greater;
    return Order::similar;
}

/// A process: candidate equation paired with the chain it refines.
template <class F>
struct Process {
    Polynomial<F> poly;
    RegularChain<F> chain;

    Var greatest_var() const { return std::max(poly.mvar(), chain.max_mvar()); }
};

/// The Def. 4.1 well-founded order driving termination: greatest variable,
/// then dim, then chain rank, then polynomial rank.
template <class F>
Order process_compare(const Process<F>& a, const Process<F>& b) {
    Var va = a.greatest_var(), vb = b.greatest_var();
    if (va != vb) return va < vb ? Order::less : Order::greater;
    int da = a.chain.dim(), db = b.chain.dim();
    if (da != db) return da < db ? Order::less : Order::greater;
    Order c = chain_rank_compare(a.chain, b.chain);
    if (c != Order::similar) return c;
    return rank_compare(a.poly, b.poly);
}

// ---------------------------------------------------------------------------
// Canonical ordering of splits
// ---------------------------------------------------------------------------

template <class F>
int chain_cmp(const TriangularSet<F>& a, const TriangularSet<F>& b) {
    if (a.height() != b.height()) return a.height() < b.height() ? -1 : 1;
    Order r = chain_rank_compare(a, b);
    if (r == Order::less) return -1;
    if (r == Order::greater) return 1;
    auto pa = a.polys();
    auto pb = b.polys();
    for (std::size_t i = 0; i < pa.size(); ++i) {
        int c = poly_cmp(pa[i], pb[i]);
        if (c != 0) return c;
    }
    return 0;
}

/// Sort by (height, chain rank, term-map order) and merge syntactic
/// duplicates; makes results reproducible and worker-count independent.
template <class F>
void canonical_sort(Split<F>& split) {
    std::sort(split.begin(), split.end(),
              [](const RegularChain<F>& x, const RegularChain<F>& y) { return chain_cmp(x, y) < 0; });
    split.erase(std::unique(split.begin(), split.end(),
                            [](const RegularChain<F>& x, const RegularChain<F>& y) {
                                return chain_cmp(x, y) == 0;
                            }),
                split.end());
}

}  // namespace trisect

#endif
