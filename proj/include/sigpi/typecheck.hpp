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
#include <string>
#include <vector>

#include "sigpi/program.hpp"

namespace sigpi {

struct TypeReport {
    /// Inferred types of thread parameters ("Handle.l") and of the free
    /// signals of main ("main.s").
    std::map<std::string, std::string> bindings;
    std::vector<std::string> errors;

    bool ok() const { return errors.empty(); }
};

/// Monomorphic inference over all definitions, main and input
/// declarations. `!s` has type List(t) when s has type Sig(t).
TypeReport typecheck(const Module& m);

/// Checks `m` together with an extra closed process whose free names are
/// treated like those of main.
TypeReport typecheck(const Module& m, const ProcPtr& extra);

}  // namespace sigpi
