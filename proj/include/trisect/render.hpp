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

#ifndef TRISECT_RENDER_HPP
#define TRISECT_RENDER_HPP

#include <string>

#include <json.hpp>

#include "trisect/verify.hpp"

namespace trisect {

/// Chain polynomials, greatest main variable first.
template <class F>
std::vector<std::string> chain_strings(const RegularChain<F>& c) {
    auto polys = c.polys();
    std::vector<std::string> out;
    for (auto it = polys.rbegin(); it != polys.rend(); ++it) out.push_back(to_string(*it));
    return out;
}

template <class F>
std::string render_chain(const RegularChain<F>& c) {
    std::string s = "[";
    bool first = true;
    for (const auto& p : chain_strings(c)) {
        if (!first) s += ", ";
        first = false;
        s += p;
    }
    return s + "]";
}

/// One chain per line; a canonically sorted split renders identically for
/// every worker count.
template <class F>
std::string render_split_text(const Split<F>& split) {
    std::string s;
    for (const auto& c : split) s += render_chain(c) + "\n";
    return s;
}

/// §7-style size metric: characters of the canonical rendering, whitespace
/// stripped so formatting choices do not contribute.
template <class F>
std::size_t output_size(const Split<F>& split) {
    std::size_t n = 0;
    for (const auto& c : split)
        for (char ch : render_chain(c))
            if (!std::isspace(static_cast<unsigned char>(ch))) ++n;
    return n;
}

template <class F>
nlohmann::json split_json(const Split<F>& split) {
    nlohmann::json chains = nlohmann::json::array();
    for (const auto& c : split) chains.push_back(chain_strings(c));
    return chains;
}

inline nlohmann::json report_json(const CheckReport& r) {
    auto pts = [](const std::vector<std::vector<std::uint64_t>>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& p : v) a.push_back(p);
        return a;
    };
    return nlohmann::json{{"prime", r.prime},
                          {"applicable", r.applicable},
                          {"skip_reason", r.skip_reason},
                          {"pass", r.pass},
                          {"missing", pts(r.missing_points)},
                          {"extra", pts(r.extra_points)},
                          {"flagged", pts(r.flagged_points)}};
}

}  // namespace trisect

#endif
