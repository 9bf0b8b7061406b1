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

#ifndef TRISECT_VERIFY_HPP
#define TRISECT_VERIFY_HPP

#include <set>
#include <sstream>
#include <string>

#include "trisect/decompose.hpp"

namespace trisect {

/// A prime is "bad" for a reduction when denominators vanish or an initial
/// collapses mod p; such primes are skipped rather than reported as failures.
class BadPrime : public std::runtime_error {
public:
    explicit BadPrime(const std::string& why) : std::runtime_error(why) {}
};

/// Exhaustively enumerated subset of GF(p)^n (tuples in variable order,
/// smallest variable first).
struct PointSet {
    std::uint64_t prime = 0;
    int nvars = 0;
    std::set<std::vector<std::uint64_t>> points;

    bool contains(const std::vector<std::uint64_t>& pt) const { return points.count(pt) != 0; }
};

inline std::string point_str(const std::vector<std::uint64_t>& pt) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? "," : "") << pt[i];
    os << ")";
    return os.str();
}

namespace detail {

inline void check_enumeration_cap(std::uint64_t p, int n) {
    double size = 1;
    for (int i = 0; i < n; ++i) size *= static_cast<double>(p);
    if (size > 1e6)
        throw std::invalid_argument("enumeration over GF(p)^n capped at 10^6 points");
}

/// Odometer over GF(p)^n.
inline bool next_point(std::vector<std::uint64_t>& pt, std::uint64_t p) {
    for (std::size_t i = 0; i < pt.size(); ++i) {
        if (++pt[i] < p) return true;
        pt[i] = 0;
    }
    return false;
}

}  // namespace detail

inline ContextPtr<PrimeField> prime_context(const VarOrder& vars, std::uint64_t p) {
    return std::make_shared<const Context<PrimeField>>(PrimeField(p), vars);
}

/// Image of a rational polynomial in GF(p)[x]; throws BadPrime when a
/// denominator vanishes mod p.
inline Polynomial<PrimeField> reduce_mod(const Polynomial<RationalField>& f,
                                         const ContextPtr<PrimeField>& gctx) {
    const PrimeField& fld = gctx->field;
    typename Polynomial<PrimeField>::TermMap terms;
    for (const auto& [m, c] : f.terms()) {
        if (fld.reduce(c.get_den()) == 0)
            throw BadPrime("denominator divisible by " + std::to_string(fld.p));
        auto e = fld.from_ratio(c.get_num(), c.get_den());
        if (!fld.is_zero(e)) terms.emplace(m, e);
    }
    return Polynomial<PrimeField>::from_terms(gctx, std::move(terms));
}

/// Uniform "view mod p" used by the checks below: rational inputs reduce,
/// GF(p) inputs pass through (their characteristic must match).
template <class F>
Polynomial<PrimeField> to_prime(const Polynomial<F>& f, const ContextPtr<PrimeField>& gctx) {
    if constexpr (std::is_same_v<F, PrimeField>) {
        if (f.field().p != gctx->field.p)
            throw std::invalid_argument("verification prime differs from computation field");
        return Polynomial<PrimeField>::from_terms(gctx, f.terms());
    } else {
        return reduce_mod(f, gctx);
    }
}

/// Chain reduction with the bad-prime guard: every polynomial must keep its
/// main degree (otherwise an initial vanished and W(T) loses its meaning).
template <class F>
std::vector<Polynomial<PrimeField>> chain_mod(const RegularChain<F>& t,
                                              const ContextPtr<PrimeField>& gctx) {
    std::vector<Polynomial<PrimeField>> out;
    for (const auto& p : t.polys()) {
        Polynomial<PrimeField> r = to_prime(p, gctx);
        if (r.degree(p.mvar()) != mdeg(p))
            throw BadPrime("initial of a chain polynomial vanishes mod " + std::to_string(gctx->field.p));
        out.push_back(std::move(r));
    }
    return out;
}

/// Exact GF(p)-rational zero set of F by exhaustive enumeration.
template <class F>
PointSet enumerate_variety(const ContextPtr<F>& ctx, const std::vector<Polynomial<F>>& polys,
                           std::uint64_t prime) {
    const int n = ctx->nvars();
    detail::check_enumeration_cap(prime, n);
    auto gctx = prime_context(ctx->vars, prime);
    std::vector<Polynomial<PrimeField>> gs;
    for (const auto& f : polys) gs.push_back(to_prime(f, gctx));

    PointSet ps;
    ps.prime = prime;
    ps.nvars = n;
    std::vector<std::uint64_t> pt(static_cast<std::size_t>(n), 0);
    do {
        bool ok = true;
        for (const auto& g : gs)
            if (eval_point(g, pt) != 0) {
                ok = false;
                break;
            }
        if (ok) ps.points.insert(pt);
    } while (detail::next_point(pt, prime));
    return ps;
}

/// Points of W(T) = V(T) \ V(h_T) over GF(p).
template <class F>
PointSet quasi_component_points(const RegularChain<F>& t, std::uint64_t prime) {
    const auto& ctx = t.ctx();
    const int n = ctx->nvars();
    detail::check_enumeration_cap(prime, n);
    auto gctx = prime_context(ctx->vars, prime);
    auto polys = chain_mod(t, gctx);
    std::vector<Polynomial<PrimeField>> inits;
    for (const auto& p : t.polys()) inits.push_back(to_prime(init(p), gctx));

    PointSet ps;
    ps.prime = prime;
    ps.nvars = n;
    std::vector<std::uint64_t> pt(static_cast<std::size_t>(n), 0);
    do {
        bool on_chain = true;
        for (const auto& g : polys)
            if (eval_point(g, pt) != 0) {
                on_chain = false;
                break;
            }
        if (!on_chain) continue;
        bool init_nonzero = true;
        for (const auto& h : inits)
            if (eval_point(h, pt) == 0) {
                init_nonzero = false;
                break;
            }
        if (init_nonzero) ps.points.insert(pt);
    } while (detail::next_point(pt, prime));
    return ps;
}

// ---------------------------------------------------------------------------
// Split checks (Def. 4.2 conditions, decomposition equalities)
// ---------------------------------------------------------------------------

struct CheckReport {
    std::uint64_t prime = 0;
    bool applicable = true;  // false: prime skipped (see skip_reason)
    std::string skip_reason;
    bool pass = true;
    std::vector<std::vector<std::uint64_t>> missing_points;  // required but not covered
    std::vector<std::vector<std::uint64_t>> extra_points;    // covered but outside the target
    std::vector<std::vector<std::uint64_t>> flagged_points;  // Kalkbrener closure candidates
    std::vector<std::string> notes;

    std::string summary() const {
        std::ostringstream os;
        if (!applicable) {
            os << "p=" << prime << ": skipped (" << skip_reason << ")";
            return os.str();
        }
        os << "p=" << prime << ": " << (pass ? "pass" : "FAIL");
        if (!missing_points.empty()) os << ", missing " << point_str(missing_points.front());
        if (!extra_points.empty()) os << ", extra " << point_str(extra_points.front());
        if (!flagged_points.empty()) os << ", " << flagged_points.size() << " closure-flagged";
        for (const auto& n : notes) os << "; " << n;
        return os.str();
    }
};

/// Pointwise verification of a regular split (p, T) -> result:
/// L3 exactly (every point of V(p) cap W(T) is covered), L1 and L2 as
/// necessary conditions on every covered point.
template <class F>
CheckReport check_intersect_split(const Polynomial<F>& p, const RegularChain<F>& t,
                                  const Split<F>& result, std::uint64_t prime) {
    CheckReport rep;
    rep.prime = prime;
    try {
        PointSet wt = quasi_component_points(t, prime);
        auto gctx = prime_context(p.ctx()->vars, prime);
        Polynomial<PrimeField> gp = to_prime(p, gctx);
        std::vector<Polynomial<PrimeField>> gts;
        for (const auto& f : t.polys()) gts.push_back(to_prime(f, gctx));

        std::set<std::vector<std::uint64_t>> covered;
        for (const auto& c : result) {
            PointSet w = quasi_component_points(c, prime);
            for (const auto& pt : w.points) {
                covered.insert(pt);
                if (eval_point(gp, pt) != 0) {  // L2
                    rep.pass = false;
                    rep.extra_points.push_back(pt);
                }
                for (const auto& f : gts)  // L1
                    if (eval_point(f, pt) != 0) {
                        rep.pass = false;
                        rep.extra_points.push_back(pt);
                    }
            }
        }
        for (const auto& pt : wt.points) {  // L3, exact
            if (eval_point(gp, pt) != 0) continue;
            if (!covered.count(pt)) {
                rep.pass = false;
                rep.missing_points.push_back(pt);
            }
        }
    } catch (const BadPrime& b) {
        rep.applicable = false;
        rep.skip_reason = b.what();
    }
    return rep;
}

/// Verification of a Triangularize result.  Lazard-Wu: the union of the
/// quasi-components must equal V(F) exactly.  Kalkbrener: the union must be
/// contained in V(F); uncovered V(F) points are flagged for closure
/// inspection, not failed.
template <class F>
CheckReport check_triangularize(const std::vector<Polynomial<F>>& system, const Split<F>& result,
                                std::uint64_t prime, Mode mode,
                                const ContextPtr<F>& ctx) {
    CheckReport rep;
    rep.prime = prime;
    try {
        PointSet vf = enumerate_variety(ctx, system, prime);
        std::set<std::vector<std::uint64_t>> covered;
        for (const auto& c : result) {
            PointSet w = quasi_component_points(c, prime);
            covered.insert(w.points.begin(), w.points.end());
        }
        for (const auto& pt : covered)
            if (!vf.contains(pt)) {
                rep.pass = false;
                rep.extra_points.push_back(pt);
            }
        for (const auto& pt : vf.points) {
            if (covered.count(pt)) continue;
            if (mode == Mode::lazard_wu) {
                rep.pass = false;
                rep.missing_points.push_back(pt);
            } else {
                rep.flagged_points.push_back(pt);
            }
        }
    } catch (const BadPrime& b) {
        rep.applicable = false;
        rep.skip_reason = b.what();
    }
    return rep;
}

/// f in sqrt(sat(T)), decided symbolically: every branch of Regularize
/// carries the zero flag.
template <class F>
bool radical_membership(Engine<F>& eng, const Polynomial<F>& f, const RegularChain<F>& t) {
    for (const auto& [r, c] : eng.regularize(f, t))
        if (!r.is_zero()) return false;
    return true;
}

}  // namespace trisect

#endif
