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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigpi/canonical.hpp"

namespace sigpi {

/// Transition labels.
///
/// Tau, Out, In and Next are the relevant actions. AuxIn (`s?v`) is the
/// auxiliary input of a present statement and never reaches an exported
/// LTS. Pin is an input consumed directly by a present statement, used by
/// the bisimulation variants in which the environment does not emit.
struct Action {
    enum class Kind { Tau, Out, In, Next, AuxIn, Pin };

    Kind kind = Kind::Tau;
    std::vector<std::string> extruded;
    std::string signal;
    TermPtr value;

    static Action tau() { return {}; }
    static Action next() { return {Kind::Next, {}, {}, nullptr}; }
    static Action out(std::vector<std::string> extruded, std::string s, TermPtr v) {
        return {Kind::Out, std::move(extruded), std::move(s), std::move(v)};
    }
    static Action in(std::string s, TermPtr v) { return {Kind::In, {}, std::move(s), std::move(v)}; }
    static Action aux_in(std::string s, TermPtr v) { return {Kind::AuxIn, {}, std::move(s), std::move(v)}; }
    static Action pin(std::string s, TermPtr v) { return {Kind::Pin, {}, std::move(s), std::move(v)}; }

    /// Stable textual identity, also the sort key of edges.
    std::string key() const;
    /// Human-readable label: `tau`, `nu @0. s!v`, `s?v` style.
    std::string label() const;

    bool operator==(const Action& o) const { return key() == o.key(); }
};

const char* kind_name(Action::Kind k);

/// Signal to the set of values emitted on it, values kept sorted.
using EmissionMap = std::map<std::string, std::vector<TermPtr>>;
/// Signal to the list handed to `!s` at the end of the instant.
using CollectMap = std::map<std::string, std::vector<TermPtr>>;
/// Environment inputs closed over by rule (in).
using Alphabet = std::vector<std::pair<std::string, TermPtr>>;

Alphabet alphabet_of(const Module& m);
std::string to_string(const Alphabet& a);

struct Bounds {
    std::size_t max_states = 5000;
    std::size_t max_depth = 10000;
    std::size_t max_instants = 64;
    std::size_t max_permutations = 720;

    /// Defaults overridden by SIGPI_MAX_STATES, SIGPI_MAX_DEPTH,
    /// SIGPI_MAX_INSTANTS and SIGPI_MAX_PERMUTATIONS when set.
    static Bounds from_env();
};

struct StepFlags {
    /// Present statements re-emit the value they read (variant 1).
    bool reemit_on_read = false;
    /// Add Pin edges for present statements on free signals.
    bool pin_edges = false;
};

struct Step {
    Action action;
    CanonicalState target;
    /// Rule that produced the step and the component it fired in; used by
    /// schedulers and by the commutation checks.
    std::string rule;
    int component = -1;
    int partner = -1;
};

/// Tau, Out and AuxIn steps of a state. AuxIn is only produced for values
/// actually emitted in the state.
std::vector<Step> nested_steps(const CanonicalState& p, const Module& defs, const StepFlags& flags = {});

/// One In edge per alphabet pair, to `p || emit s v`.
std::vector<Step> input_steps(const CanonicalState& p, const Alphabet& a, const Module& defs);

/// Pin edges: a present statement on a free signal reads an alphabet value
/// directly; the value read stays emitted in the target.
std::vector<Step> pin_steps(const CanonicalState& p, const Alphabet& a, const Module& defs);

/// State after `emit s v` is added in parallel.
CanonicalState inject(const CanonicalState& p, const std::string& s, const TermPtr& v, const Module& defs);

bool suspended(const CanonicalState& p, const Module& defs);

/// End-of-instant behaviour of one restriction-free component under V, or
/// nullopt when V is not admissible for it.
std::optional<std::pair<EmissionMap, ProcPtr>> eoi_component(const ProcPtr& p, const CollectMap& v,
                                                              const Module& defs);

EmissionMap emission_map(const CanonicalState& p);

struct NextResult {
    std::vector<Step> steps;
    bool truncated = false;
};

/// All N successors of a suspended state, one per distinct outcome of the
/// admissible collect maps.
NextResult next_steps(const CanonicalState& p, const Module& defs, const Bounds& b);

/// N successor for one given collect map.
std::optional<CanonicalState> next_with(const CanonicalState& p, const CollectMap& v, const Module& defs);

struct RelevantResult {
    std::vector<Step> steps;
    bool truncated = false;
};

RelevantResult relevant_steps(const CanonicalState& p, const Module& defs, const Alphabet& a, const Bounds& b,
                              const StepFlags& flags = {});

bool compatible(const Action& a, const Action& b);

/// a with b taken away; throws std::invalid_argument on incompatible actions.
Action residual(const Action& a, const Action& b);

}  // namespace sigpi
