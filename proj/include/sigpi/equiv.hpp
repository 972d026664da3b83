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

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sigpi/explore.hpp"

namespace sigpi {

/// Standard: strong challenges answered by weak steps.
/// Weak: weak challenges on both sides.
/// Reemit: present statements re-emit what they read.
/// Pinned: inputs are read directly by present statements and are not
///   challenged; related pairs must stay related under any added
///   alphabet emission instead.
/// Split: pinned reads are challenged and may be answered by absorbing
///   the emission; N is checked under small emission contexts.
/// Barbed: tau, commitment and suspension only; reactive inputs only.
enum class Variant { Standard, Weak, Reemit, Pinned, Split, Barbed };

const char* variant_name(Variant v);
std::optional<Variant> parse_variant(const std::string& name);

enum class Verdict { Equivalent, Distinguished, Inconclusive, Unsupported };

const char* verdict_name(Verdict v);

struct BisimOptions {
    Variant variant = Variant::Standard;
    /// N answered by tau* . N . tau* instead of tau* . N.
    bool relaxed_next = false;
    /// Largest emission context used by the Split variant's N clause.
    std::size_t context_size = 2;
};

/// Why two states are not related: a challenge by one of them and, for
/// every possible answer of the other, why the resulting pair is not
/// related either. Nodes are shared, so the tree is a DAG.
struct Witness {
    int left = -1;
    int right = -1;
    bool challenger_left = true;
    /// "step", "input", "closure", "next-context", "commit", "suspend".
    std::string clause;
    Action action;
    int target = -1;
    /// Emission context (alphabet indices) for "next-context", or the
    /// closure pair index for "closure".
    std::vector<int> context;

    struct Answer {
        int state;
        std::string via;
        std::shared_ptr<Witness> why;
    };
    std::vector<Answer> answers;
};

struct BisimResult {
    Verdict verdict = Verdict::Inconclusive;
    BisimOptions options;
    Alphabet alphabet;
    Bounds bounds;
    Lts lts;
    int left = -1;
    int right = -1;
    std::shared_ptr<Witness> witness;
    std::string note;
};

BisimResult bisim(const ProcPtr& p, const ProcPtr& q, const Module& defs, const Alphabet& a, const Bounds& b,
                  const BisimOptions& o = {});
BisimResult bisim(const CanonicalState& p, const CanonicalState& q, const Module& defs, const Alphabet& a,
                  const Bounds& b, const BisimOptions& o = {});

BisimResult bisim_relaxed_next(const ProcPtr& p, const ProcPtr& q, const Module& defs, const Alphabet& a,
                               const Bounds& b);

/// Largest bisimulation of an LTS with itself, as a class index per state.
/// The LTS must have been explored with the flags the variant needs.
std::vector<int> self_partition(const Lts& l, const Alphabet& a, const BisimOptions& o = {});

/// Exploration flags required by a variant.
StepFlags flags_for(Variant v);

/// Mechanically re-checks a distinguishing witness against the LTS.
bool replay(const BisimResult& r);

/// Some tau-reachable state is suspended. nullopt when the exploration
/// hit a bound before deciding.
std::optional<bool> weak_susp(const ProcPtr& p, const Module& defs, const Bounds& b);

/// Signals on which the state can emit right away.
std::set<std::string> commitment(const CanonicalState& p, const Module& defs);

/// Static context `new s1 in ... (hole || r1 || ... )`, built inside out:
/// each layer either adds a parallel component or restricts a name.
struct Context {
    struct Layer {
        bool restrict = false;
        std::string name;
        ProcPtr component;
    };
    std::vector<Layer> layers;

    ProcPtr fill(const ProcPtr& hole) const;
    std::string describe() const;
};

/// Static contexts of up to `size_cap` layers. Components are alphabet
/// emissions, readers `present s(x) { emit t w } else 0` forwarding to an
/// alphabet pair, and the supplied fragments; restrictions range over
/// `signals`.
std::vector<Context> enumerate_contexts(const std::vector<std::string>& signals, const Alphabet& a,
                                        const std::vector<ProcPtr>& fragments, std::size_t size_cap);

struct FalsifierResult {
    std::optional<Context> distinguishing;
    std::size_t tried = 0;
    std::size_t inconclusive = 0;
};

/// Searches the given contexts for one separating p and q.
FalsifierResult context_falsifier(const ProcPtr& p, const ProcPtr& q, const Module& defs, const Alphabet& a,
                                  const Bounds& b, const std::vector<Context>& contexts);

/// Joins two source modules for a two-file comparison. Threads of `b`
/// whose names clash with a different definition in `a` get a prime
/// appended; `b_main` is rewritten accordingly. Conflicting types or
/// constructors and different alphabets are errors (std::runtime_error).
Module merge_modules(const Module& a, const Module& b, ProcPtr& b_main);

}  // namespace sigpi
