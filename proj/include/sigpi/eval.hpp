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

#include <stdexcept>

#include "sigpi/program.hpp"

namespace sigpi {

class EvalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Evaluates a closed expression (free variables are signal names) to a
/// value. User functions rewrite by their first matching equation; every
/// function application consumes one unit of `defs.fuel`.
///
/// Throws EvalError on fuel exhaustion, a missing equation, or a
/// dereference left in the expression.
TermPtr eval_expr(const TermPtr& e, const Module& defs);

}  // namespace sigpi
