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

#ifndef TRISECT_CONTEXT_HPP
#define TRISECT_CONTEXT_HPP

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "trisect/field.hpp"

namespace trisect {

/// Variable index in a VarOrder: 0 is the smallest variable, n-1 the
/// greatest.  NO_VAR marks "no variable" (constants); indices >= size()
/// act as the formal beyond-last sentinel.
using Var = int;
inline constexpr Var NO_VAR = -1;

/// Ordered variable list, immutable for the lifetime of a computation.
class VarOrder {
public:
    VarOrder() = default;
    explicit VarOrder(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("duplicate variable name: " + names_[i]);
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(Var v) const { return names_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::string>& names() const { return names_; }

    Var index_of(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) return NO_VAR;
        return static_cast<Var>(it - names_.begin());
    }

    bool operator==(const VarOrder& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

/// Shared computation context: one coefficient field, one variable order.
/// Every polynomial of a computation points at the same context.
template <class F>
struct Context {
    F field;
    VarOrder vars;

    Context(F f, VarOrder v) : field(std::move(f)), vars(std::move(v)) {}
    int nvars() const { return vars.size(); }
};

template <class F>
using ContextPtr = std::shared_ptr<const Context<F>>;

template <class F>
ContextPtr<F> make_context(F field, std::vector<std::string> names) {
    return std::make_shared<const Context<F>>(std::move(field), VarOrder(std::move(names)));
}

template <class F>
inline bool same_context(const ContextPtr<F>& a, const ContextPtr<F>& b) {
    return a == b || (a && b && a->field == b->field && a->vars == b->vars);
}

}  // namespace trisect

#endif
