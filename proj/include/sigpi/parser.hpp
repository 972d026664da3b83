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

#include <string_view>

#include "sigpi/lexer.hpp"
#include "sigpi/program.hpp"

namespace sigpi {

/// Parses a `.spi` source file into a definition table (builtins included).
///
/// Sugar is expanded while parsing: `pause.K`, `tau.P`, `P + Q`,
/// `else 0` (as `else HALT()`), list literals and `x :: l`. A `pause.P`
/// whose body is not a call is lifted into a generated thread `_kN`
/// taking the free names of P.
///
/// Throws SyntaxError carrying positioned diagnostics.
Module parse_module(std::string_view source);

/// Parses a process in the scope of `defs`; lifted threads are added to
/// `defs`.
ProcPtr parse_process(std::string_view source, Module& defs);

/// Parses a closed expression (constructors, functions, signal names).
TermPtr parse_term(std::string_view source, const Module& defs);

}  // namespace sigpi
