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

#include "sigpi/types.hpp"

namespace sigpi {

TypePtr unit_type() {
    static const TypePtr unit = std::make_shared<const Type>(Type{Type::Kind::Unit, "", nullptr, -1});
    return unit;
}

TypePtr sig_type(TypePtr carried) {
    return std::make_shared<const Type>(Type{Type::Kind::Sig, "", std::move(carried), -1});
}

TypePtr list_type(TypePtr elem) {
    return std::make_shared<const Type>(Type{Type::Kind::List, "", std::move(elem), -1});
}

TypePtr named_type(std::string name) {
    return std::make_shared<const Type>(Type{Type::Kind::Named, std::move(name), nullptr, -1});
}

TypePtr var_type(int id) { return std::make_shared<const Type>(Type{Type::Kind::Var, "", nullptr, id}); }

std::string to_string(const Type& t) {
    switch (t.kind) {
    case Type::Kind::Unit: return "1";
    case Type::Kind::Sig: return "Sig(" + to_string(*t.arg) + ")";
    case Type::Kind::List: return "List(" + to_string(*t.arg) + ")";
    case Type::Kind::Named: return t.name;
    case Type::Kind::Var: {
        std::string out = "'";
        int id = t.var;
        do {
            out += static_cast<char>('a' + id % 26);
            id /= 26;
        } while (id > 0);
        return out;
    }
    }
    return "?";
}

bool type_equal(const TypePtr& a, const TypePtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case Type::Kind::Unit: return true;
    case Type::Kind::Sig:
    case Type::Kind::List: return type_equal(a->arg, b->arg);
    case Type::Kind::Named: return a->name == b->name;
    case Type::Kind::Var: return a->var == b->var;
    }
    return false;
}

}  // namespace sigpi
