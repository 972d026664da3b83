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

#include "sigpi/program.hpp"

namespace sigpi {

/// Core-syntax rendering; sugar is never reintroduced and emitted values
/// are always explicit. The output reparses to the same AST.
std::string to_string(const Proc& p);
inline std::string to_string(const ProcPtr& p) { return to_string(*p); }

std::string to_string(const Call& c);

/// Whole source file: types, functions, signals, inputs, threads, main.
std::string print_module(const Module& m);

}  // namespace sigpi
