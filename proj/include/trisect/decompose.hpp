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

#ifndef TRISECT_DECOMPOSE_HPP
#define TRISECT_DECOMPOSE_HPP

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "trisect/chain.hpp"

namespace trisect {

enum class Mode { lazard_wu, kalkbrener };

struct SolveOptions {
    Mode mode = Mode::lazard_wu;
    bool squarefree = false;
    /// Height cap on output chains; defaults to #F in Kalkbrener mode.
    std::optional<int> height_bound;
    int jobs = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    /// Expensive precondition checks (regular_gcd contract) on every call.
    bool paranoid = false;
};

class SolveTimeout : public std::runtime_error {
public:
    SolveTimeout() : std::runtime_error("solve timed out") {}
};

struct SolveStats {
    long intersect_calls = 0;
    long regularize_calls = 0;
    long process_violations = 0;
    long pruned_chains = 0;
};

/// One regular-GCD result on a dimension-preserving branch, for auditing.
template <class F>
struct GcdRecord {
    Polynomial<F> p, q, g;
    Var v = NO_VAR;
    RegularChain<F> chain;
};

template <class F>
using RegularizeResult = std::vector<std::pair<Polynomial<F>, RegularChain<F>>>;
template <class F>
using GcdResult = std::vector<std::pair<Polynomial<F>, RegularChain<F>>>;

template <class F>
class Engine;

template <class F>
Split<F> squarefree_attach_impl(Engine<F>& eng, const Polynomial<F>& p, Var xi,
                                const RegularChain<F>& chain, const Process<F>* parent);

namespace detail {

/// Deterministic parallel map: task i writes slot i; any scheduling yields
/// the same result vector.
template <class Task>
void parallel_for(int jobs, int ntasks, Task task) {
    if (jobs <= 1 || ntasks <= 1) {
        for (int i = 0; i < ntasks; ++i) task(i);
        return;
    }
    jobs = std::min(jobs, ntasks);
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        pool.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                int i = next.fetch_add(1);
                if (i >= ntasks) break;
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true);
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

/// Incremental triangular decomposition engine (Lazard-Wu and Kalkbrener).
/// Chains are immutable values; every branch computation is pure, so the
/// top-level work list may run on any number of workers.
template <class F>
class Engine {
public:
    Engine(ContextPtr<F> ctx, SolveOptions opts = {}) : ctx_(std::move(ctx)), opts_(std::move(opts)) {}

    const SolveOptions& options() const { return opts_; }
    const ContextPtr<F>& ctx() const { return ctx_; }

    SolveStats stats() const {
        SolveStats s;
        s.intersect_calls = intersect_calls_.load();
        s.regularize_calls = regularize_calls_.load();
        s.process_violations = process_violations_.load();
        s.pruned_chains = pruned_chains_.load();
        return s;
    }

    /// Sink receiving every dimension-preserving regular-GCD branch.
    void set_gcd_sink(std::vector<GcdRecord<F>>* sink) { gcd_sink_ = sink; }

    // -- public entry points ------------------------------------------------

    Split<F> triangularize(std::vector<Polynomial<F>> system) {
        for (const auto& f : system)
            if (!same_context(f.ctx(), ctx_)) throw std::invalid_argument("triangularize: mixed contexts");
        if (ctx_->nvars() == 0) throw std::invalid_argument("triangularize: empty context");

        // Set semantics; zero polynomials impose nothing.
        std::vector<Polynomial<F>> fs;
        for (auto& f : system) {
            if (f.is_zero()) continue;
            bool dup = false;
            for (const auto& g : fs) dup = dup || g == f;
            if (!dup) fs.push_back(f);
        }
        const int card = static_cast<int>(fs.size());
        std::optional<int> bound;
        if (opts_.mode == Mode::kalkbrener) bound = opts_.height_bound ? *opts_.height_bound : card;

        // Processing order is the unrolled recursion: the polynomial chosen
        // first (maximal rank, ties broken by smallest term-map order) is
        // intersected last.
        std::stable_sort(fs.begin(), fs.end(), [](const Polynomial<F>& a, const Polynomial<F>& b) {
            Order r = rank_compare(a, b);
            if (r != Order::similar) return r == Order::less;
            return poly_cmp(a, b) > 0;
        });

        Split<F> chains{RegularChain<F>(ctx_)};
        for (const auto& p : fs) {
            std::vector<Split<F>> results(chains.size());
            detail::parallel_for(opts_.jobs, static_cast<int>(chains.size()),
                                 [&](int i) { results[static_cast<std::size_t>(i)] = intersect_impl(p, chains[static_cast<std::size_t>(i)], bound, nullptr); });
            Split<F> merged;
            for (auto& r : results)
                for (auto& c : r) merged.push_back(std::move(c));
            canonical_sort(merged);
            chains = std::move(merged);
        }
        if (bound) {
            Split<F> kept;
            for (auto& c : chains) {
                if (c.height() <= *bound)
                    kept.push_back(std::move(c));
                else
                    pruned_chains_.fetch_add(1);
            }
            chains = std::move(kept);
        }
        canonical_sort(chains);
        return chains;
    }

    Split<F> intersect(const Polynomial<F>& p, const RegularChain<F>& t,
                       std::optional<int> bound = std::nullopt) {
        Split<F> out = intersect_impl(p, t, bound, nullptr);
        canonical_sort(out);
        return out;
    }

    RegularizeResult<F> regularize(const Polynomial<F>& p, const RegularChain<F>& t) {
        return regularize_impl(p, t, nullptr);
    }

    GcdResult<F> regular_gcd(const Polynomial<F>& p, const Polynomial<F>& q, Var v,
                             const SubresultantChain<F>& src, const RegularChain<F>& t) {
        return regular_gcd_impl(p, q, v, src, t, nullptr);
    }

    Split<F> intersect_free(const Polynomial<F>& p, Var xi, const RegularChain<F>& c,
                            std::optional<int> bound = std::nullopt) {
        Split<F> out = intersect_free_impl(p, xi, c, bound, nullptr);
        canonical_sort(out);
        return out;
    }

    Split<F> intersect_algebraic(const Polynomial<F>& p, const RegularChain<F>& t, Var xi,
                                 const SubresultantChain<F>& src, const RegularChain<F>& c,
                                 std::optional<int> bound = std::nullopt) {
        Split<F> out = intersect_algebraic_impl(p, t, xi, src, c, bound, nullptr);
        canonical_sort(out);
        return out;
    }

    Split<F> clean_chain(const RegularChain<F>& c, const RegularChain<F>& t, Var xi,
                         std::optional<int> bound = std::nullopt) {
        Split<F> out = clean_chain_impl(c, t, xi, bound, nullptr);
        canonical_sort(out);
        return out;
    }

    Split<F> extend(const RegularChain<F>& c, const RegularChain<F>& t, Var xi) {
        Split<F> out = extend_impl(c, t, xi, nullptr);
        canonical_sort(out);
        return out;
    }

    // -- internals (used by the squarefree routines) --------------------------

    Split<F> intersect_impl(const Polynomial<F>& p, const RegularChain<F>& t,
                            std::optional<int> bound, const Process<F>* parent) {
        check_deadline();
        Process<F> cur{p, t};
        note_process(cur, parent);
        intersect_calls_.fetch_add(1, std::memory_order_relaxed);

        if (prem_chain(p, t).is_zero()) return filtered({t}, bound);
        if (p.is_constant()) return {};

        // Elimination loop: successive resultants against the chain, keyed
        // by the main variable they eliminate.
        std::map<Var, Polynomial<F>> P;
        std::map<Var, SubresultantChain<F>> S;
        Polynomial<F> r = p;
        P.emplace(r.mvar(), r);
        while (r.mvar() != NO_VAR && t.has_mvar(r.mvar())) {
            Var v = r.mvar();
            SubresultantChain<F> src = subresultant_chain_any(r, t.poly_of(v), v);
            r = src.resultant_entry();
            S.emplace(v, std::move(src));
            if (r.is_zero()) break;  // the zero resultant is not recorded in P
            r = normalize_content(r);
            if (r.is_constant()) return {};
            P.emplace(r.mvar(), r);
        }

        const int n = ctx_->nvars();
        Split<F> cur_set{RegularChain<F>(ctx_)};
        for (Var xi = 0; xi < n; ++xi) {
            check_deadline();
            std::optional<int> residual;
            if (bound) {
                int above = 0;
                for (Var mv : t.mvars())
                    if (mv >= xi + 1) ++above;
                residual = *bound - above;
            }
            Split<F> next_set;
            const bool in_p = P.count(xi) != 0;
            const bool in_t = t.has_mvar(xi);
            for (const auto& c : cur_set) {
                if (!in_p && !in_t) {
                    append(next_set, clean_chain_impl(c, t, xi + 1, residual, &cur));
                } else if (!in_p) {
                    for (const auto& b : attach(t.poly_of(xi), xi, c, ChainCert::init_regular, &cur))
                        append(next_set, clean_chain_impl(b, t, xi + 1, residual, &cur));
                } else if (!in_t) {
                    for (const auto& d : intersect_free_impl(P.at(xi), xi, c, residual, &cur))
                        append(next_set, clean_chain_impl(d, t, xi + 1, residual, &cur));
                } else {
                    for (const auto& d : intersect_algebraic_impl(P.at(xi), t, xi, S.at(xi), c, residual, &cur))
                        append(next_set, clean_chain_impl(d, t, xi + 1, residual, &cur));
                }
            }
            canonical_sort(next_set);
            cur_set = std::move(next_set);
        }
        return filtered(std::move(cur_set), bound);
    }

    RegularizeResult<F> regularize_impl(const Polynomial<F>& p, const RegularChain<F>& t,
                                        const Process<F>* parent) {
        check_deadline();
        Process<F> cur{p, t};
        note_process(cur, parent);
        regularize_calls_.fetch_add(1, std::memory_order_relaxed);

        if (p.is_constant() || t.empty()) return {{p, t}};
        const Var v = p.mvar();
        RegularizeResult<F> out;

        if (!t.has_mvar(v)) {
            for (auto& [f, c] : regularize_impl(init(p), t, &cur)) {
                if (f.is_zero())
                    append(out, regularize_impl(tail(p), c, &cur));
                else
                    out.emplace_back(p, c);
            }
            return out;
        }

        const Polynomial<F>& tv = t.poly_of(v);
        const RegularChain<F> lower = t.lower_than(v);
        const auto upper_geq = t.upper_from(v);             // T_{>=v}
        const auto upper_gt = t.upper_from(v + 1);          // T_{>v}
        SubresultantChain<F> src = subresultant_chain_any(p, tv, v);
        Polynomial<F> r = normalize_content(src.resultant_entry());

        for (auto& [f, c] : regularize_impl(r, lower, &cur)) {
            assert(c.height() >= lower.height());
            if (c.height() > lower.height()) {  // dim dropped below v
                for (const auto& d : extend_impl(c, t, v, &cur))
                    append(out, regularize_impl(p, d, &cur));
            } else if (!f.is_zero()) {
                out.emplace_back(p, attach_all(c, upper_geq, ChainCert::rebuilt));
            } else {
                for (auto& [g, d] : regular_gcd_impl(p, tv, v, src, c, &cur)) {
                    if (d.height() > c.height()) {  // dim dropped inside the gcd scan
                        for (const auto& e : extend_impl(d, t, v, &cur))
                            append(out, regularize_impl(p, e, &cur));
                        continue;
                    }
                    if (mdeg(g) == mdeg(tv)) {  // g = T_v: p lies in the radical
                        out.emplace_back(Polynomial<F>(ctx_), attach_all(d, upper_geq, ChainCert::rebuilt));
                        continue;
                    }
                    out.emplace_back(Polynomial<F>(ctx_),
                                     attach_all(d.extended(g, ChainCert::gcd_branch), upper_gt, ChainCert::rebuilt));
                    Polynomial<F> q = pquo_classical(tv, g, v);
                    append(out, regularize_impl(
                                    p, attach_all(d.extended(q, ChainCert::gcd_branch), upper_gt, ChainCert::rebuilt),
                                    &cur));
                    for (const auto& e : intersect_impl(init(g), d, std::nullopt, &cur))
                        for (const auto& fc : extend_impl(e, t, v, &cur))
                            append(out, regularize_impl(p, fc, &cur));
                }
            }
        }
        return out;
    }

    GcdResult<F> regular_gcd_impl(const Polynomial<F>& p, const Polynomial<F>& q, Var v,
                                  const SubresultantChain<F>& src, const RegularChain<F>& t,
                                  const Process<F>* parent) {
        if (opts_.paranoid && !is_regular(init(q), t))
            throw std::logic_error("regular_gcd: init(q) not regular modulo sat(T)");
        GcdResult<F> out;
        std::vector<std::pair<RegularChain<F>, int>> work{{t, 1}};
        while (!work.empty()) {
            auto [c, i] = std::move(work.back());
            work.pop_back();
            if (i > src.lambda + 1)
                throw std::logic_error("regular_gcd: scan ran past the chain top (precondition violated)");
            for (auto& [f, d] : regularize_impl(src.principal(i), c, parent)) {
                if (d.height() > c.height()) {
                    out.emplace_back(Polynomial<F>(ctx_), d);  // dimension dropped: undefined branch
                } else if (f.is_zero()) {
                    work.emplace_back(d, i + 1);
                } else {
                    out.emplace_back(src.entry(i), d);
                    if (gcd_sink_) {
                        std::lock_guard<std::mutex> lock(sink_mutex_);
                        gcd_sink_->push_back(GcdRecord<F>{p, q, src.entry(i), v, d});
                    }
                }
            }
        }
        return out;
    }

    Split<F> intersect_free_impl(const Polynomial<F>& p, Var xi, const RegularChain<F>& c,
                                 std::optional<int> bound, const Process<F>* parent) {
        assert(p.mvar() == xi);
        Split<F> out;
        for (auto& [f, d] : regularize_impl(init(p), c, parent)) {
            if (f.is_zero()) {
                append(out, intersect_impl(tail(p), d, bound, parent));
                continue;
            }
            append(out, attach(p, xi, d, ChainCert::init_regular, parent));
            // Deep branch: worthwhile only if it can still meet the bound.
            if (bound && d.height() >= *bound) continue;
            for (const auto& e : intersect_impl(init(p), d, bound, parent))
                append(out, intersect_impl(tail(p), e, bound, parent));
        }
        return out;
    }

    Split<F> intersect_algebraic_impl(const Polynomial<F>& p, const RegularChain<F>& t, Var xi,
                                      const SubresultantChain<F>& src, const RegularChain<F>& c,
                                      std::optional<int> bound, const Process<F>* parent) {
        assert(p.mvar() == xi && t.has_mvar(xi));
        Split<F> out;
        for (auto& [g, d] : regular_gcd_impl(p, t.poly_of(xi), xi, src, c, parent)) {
            if (d.height() > c.height()) {
                for (const auto& e : clean_chain_impl(d, t, xi, bound, parent))
                    append(out, intersect_algebraic_impl(p, t, xi, src, e, bound, parent));
            } else {
                append(out, attach(g, xi, d, ChainCert::gcd_branch, parent));
                for (const auto& e : intersect_impl(init(g), d, bound, parent))
                    for (const auto& fc : clean_chain_impl(e, t, xi, bound, parent))
                        append(out, intersect_algebraic_impl(p, t, xi, src, fc, bound, parent));
            }
        }
        return out;
    }

    Split<F> clean_chain_impl(const RegularChain<F>& c, const RegularChain<F>& t, Var xi,
                              std::optional<int> bound, const Process<F>* parent) {
        Split<F> out;
        if (!t.has_mvar(xi) || c.dim() == t.lower_than(xi).dim()) {
            out.push_back(c);
        } else {
            for (auto& [f, d] : regularize_impl(init(t.poly_of(xi)), c, parent))
                if (!f.is_zero()) out.push_back(d);
        }
        return filtered(std::move(out), bound);
    }

    Split<F> extend_impl(const RegularChain<F>& c, const RegularChain<F>& t, Var xi,
                         const Process<F>* parent) {
        Split<F> out{c};
        for (const auto& p : t.upper_from(xi)) {
            Split<F> next;
            for (const auto& d : out)
                for (auto& [f, e] : regularize_impl(init(p), d, parent))
                    if (!f.is_zero()) next.push_back(e.extended(p, ChainCert::rebuilt));
            out = std::move(next);
        }
        return out;
    }

    /// Chain-construction site: T u p, routed through the squarefree
    /// machinery when the option is set.
    Split<F> attach(const Polynomial<F>& p, Var xi, const RegularChain<F>& c, ChainCert cert,
                    const Process<F>* parent) {
        if (!opts_.squarefree) return {c.extended(p, cert)};
        return squarefree_attach_impl(*this, p, xi, c, parent);
    }

private:
    static RegularChain<F> attach_all(RegularChain<F> base, const std::vector<Polynomial<F>>& polys,
                                      ChainCert cert) {
        for (const auto& p : polys) base = base.extended(p, cert);
        return base;
    }

    template <class Vec>
    static void append(Vec& into, Vec more) {
        for (auto& x : more) into.push_back(std::move(x));
    }
    static void append(Split<F>& into, Split<F> more) {
        for (auto& x : more) into.push_back(std::move(x));
    }

    Split<F> filtered(Split<F> in, std::optional<int> bound) {
        if (!bound) return in;
        Split<F> out;
        for (auto& c : in) {
            if (c.height() <= *bound)
                out.push_back(std::move(c));
            else
                pruned_chains_.fetch_add(1, std::memory_order_relaxed);
        }
        return out;
    }

    void note_process(const Process<F>& cur, const Process<F>* parent) {
        if (!parent) return;
        if (process_compare(cur, *parent) != Order::less) {
            process_violations_.fetch_add(1);
            assert(false && "recursive call does not decrease the process order");
        }
    }

    void check_deadline() const {
        if (opts_.deadline && std::chrono::steady_clock::now() > *opts_.deadline) throw SolveTimeout();
    }

    ContextPtr<F> ctx_;
    SolveOptions opts_;
    std::atomic<long> intersect_calls_{0};
    std::atomic<long> regularize_calls_{0};
    std::atomic<long> process_violations_{0};
    std::atomic<long> pruned_chains_{0};
    std::vector<GcdRecord<F>>* gcd_sink_ = nullptr;
    std::mutex sink_mutex_;
};

}  // namespace trisect

#include "trisect/squarefree.hpp"

#endif
