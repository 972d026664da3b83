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
#include <string>

namespace sigpi {

struct Type;
using TypePtr = std::shared_ptr<const Type>;

/// First-order types: 1, Sig(t), List(t), declared inductive types, and
/// type variables. Declarations only use variables for the builtin
/// polymorphic constructors (nil, cons).
struct Type {
    enum class Kind { Unit, Sig, List, Named, Var };

    Kind kind;
    std::string name;  // Named
    TypePtr arg;       // Sig, List
    int var = -1;      // Var
};

TypePtr unit_type();
TypePtr sig_type(TypePtr carried);
TypePtr list_type(TypePtr elem);
TypePtr named_type(std::string name);
TypePtr var_type(int id);

std::string to_string(const Type& t);
inline std::string to_string(const TypePtr& t) { return to_string(*t); }
bool type_equal(const TypePtr& a, const TypePtr& b);

}  // namespace sigpi
