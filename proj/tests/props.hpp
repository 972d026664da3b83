/*
 * Copyright 2026 The sigpi Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <map>
#include <regex>
#include <string>
#include <vector>

#include "sigpi/canonical.hpp"
#include "sigpi/explore.hpp"

namespace sigpi::testing {

/// Action key with extruded-name indices erased.
inline std::string anonymous_key(const Action& a) {
    static const std::regex extruded("@[0-9]+");
    return std::regex_replace(a.key(), extruded, "@");
}

/// Tau, output and input steps of a state.
inline std::vector<Step> io_steps(const CanonicalState& p, const Module& defs, const Alphabet& a) {
    std::vector<Step> out;
    for (auto& s : nested_steps(p, defs))
        if (s.action.kind != Action::Kind::AuxIn) out.push_back(std::move(s));
    for (auto& s : input_steps(p, a, defs)) out.push_back(std::move(s));
    return out;
}

/// Input/output commutation squares: for two different steps p -a-> p1
/// and p -b-> p2 with at least one of them an input or an output, there
/// are p1 -(b minus a)-> p3 and p2 -(a minus b)-> p4 with p3 and p4
/// structurally equivalent up to the names of extruded signals.
struct SquareReport {
    std::size_t checked = 0;
    std::vector<std::string> open;
};

inline SquareReport commutation_squares(const Lts& l, const Module& defs, const Alphabet& a) {
    std::map<std::string, std::vector<Step>> cache;
    auto steps_of = [&](const CanonicalState& p) -> const std::vector<Step>& {
        auto it = cache.find(p.key);
        if (it == cache.end()) it = cache.emplace(p.key, io_steps(p, defs, a)).first;
        return it->second;
    };
    auto targets = [&](const CanonicalState& p, const Action& want) {
        std::vector<const CanonicalState*> out;
        std::string key = anonymous_key(want);
        for (const auto& s : steps_of(p))
            if (anonymous_key(s.action) == key) out.push_back(&s.target);
        return out;
    };
    SquareReport r;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (!l.expanded[i]) continue;
        const auto steps = steps_of(l.states[i]);
        for (std::size_t x = 0; x < steps.size(); ++x)
            for (std::size_t y = x + 1; y < steps.size(); ++y) {
                const Step& sa = steps[x];
                const Step& sb = steps[y];
                bool io = sa.action.kind != Action::Kind::Tau || sb.action.kind != Action::Kind::Tau;
                if (!io || sa.action.key() == sb.action.key()) continue;
                ++r.checked;
                auto t1 = targets(sa.target, residual(sb.action, sa.action));
                auto t2 = targets(sb.target, residual(sa.action, sb.action));
                bool closed = false;
                for (const auto* p3 : t1) {
                    for (const auto* p4 : t2)
                        if (equal_up_to_extrusion(*p3, *p4, defs)) {
                            closed = true;
                            break;
                        }
                    if (closed) break;
                }
                if (!closed)
                    r.open.push_back(l.states[i].key + " : " + sa.action.label() + " / " + sb.action.label());
            }
    }
    return r;
}

}  // namespace sigpi::testing
