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

#include <string>
#include <vector>

#include "sigpi/program.hpp"

namespace sigpi {

/// Program modulo structural equivalence.
///
/// All static restrictions are hoisted and named `#0 .. #n-1`; the
/// remaining components are sorted by printed form. Binders inside a
/// component are named `%k` in preorder. Emitted values are evaluated and
/// duplicate emitters removed. `key` is the printed form of the whole
/// state and is the identity used by every LTS.
struct CanonicalState {
    int nbound = 0;
    std::vector<ProcPtr> components;
    std::string key;

    bool operator==(const CanonicalState& o) const { return key == o.key; }
    bool operator<(const CanonicalState& o) const { return key < o.key; }
};

std::string bound_name(int k);

struct CanonicalOptions {
    /// Free names starting with this character are treated as anonymous:
    /// renumbered canonically but never collected. Used to compare states
    /// up to the names chosen for extruded signals.
    char anonymous_prefix = '\0';
    /// Cap on candidate labelings tried for symmetric bound names.
    std::size_t max_labelings = 720;
};

/// Canonical form of `new bound in (c1 || ... || cn)`.
CanonicalState canonicalize(const std::vector<std::string>& bound, const std::vector<ProcPtr>& components,
                            const Module& defs, const CanonicalOptions& opts = {});

CanonicalState canonicalize(const ProcPtr& p, const Module& defs, const CanonicalOptions& opts = {});

/// Rebuilds `new #0 in ... new #n-1 in (c1 || ... || cn)`.
ProcPtr to_process(const CanonicalState& s);

bool struct_equiv(const ProcPtr& p, const ProcPtr& q, const Module& defs);

/// Equality up to structural equivalence and renaming of `@k` names.
bool equal_up_to_extrusion(const CanonicalState& a, const CanonicalState& b, const Module& defs);

/// Free names of a canonical state (bound `#k` names excluded).
std::set<std::string> free_names(const CanonicalState& s);

}  // namespace sigpi
