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
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sigpi {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// First-order term shared by expressions, patterns and values.
///
/// A value is a term built only from Var leaves (signal names) and
/// constructor applications. Patterns use Var leaves as binders, `_` being
/// the anonymous binder. Deref leaves (`!s`) only appear in continuation
/// arguments.
struct Term {
    enum class Kind { Var, Ctor, Fun, Deref };

    Kind kind;
    std::string name;
    std::vector<TermPtr> args;
};

inline constexpr const char* kUnitCtor = "*";
inline constexpr const char* kNilCtor = "nil";
inline constexpr const char* kConsCtor = "cons";
inline constexpr const char* kWildcard = "_";

TermPtr make_var(std::string name);
TermPtr make_ctor(std::string name, std::vector<TermPtr> args = {});
TermPtr make_fun(std::string name, std::vector<TermPtr> args);
TermPtr make_deref(std::string signal);
TermPtr make_unit();
TermPtr make_list(const std::vector<TermPtr>& items);

bool is_value(const Term& t);
bool has_deref(const Term& t);
bool term_equal(const TermPtr& a, const TermPtr& b);

/// Printed form: list sugar `[a; b]`, `x :: l`, `[]`; otherwise `c(a, b)`.
std::string to_string(const Term& t);
inline std::string to_string(const TermPtr& t) { return to_string(*t); }

/// Total order on terms used for canonical ordering of values.
bool term_less(const TermPtr& a, const TermPtr& b);

/// Var and Deref names occurring in the term.
void collect_names(const Term& t, std::set<std::string>& out);
std::set<std::string> names_of(const Term& t);

using Subst = std::map<std::string, TermPtr>;

/// Replaces Var leaves bound in `theta`. A Deref `!x` is renamed when
/// theta maps x to a signal name.
TermPtr substitute(const TermPtr& t, const Subst& theta);

/// Renames names (Var and Deref leaves) according to `renaming`.
TermPtr rename(const TermPtr& t, const std::map<std::string, std::string>& renaming);

/// Binders of a pattern in left-to-right order, `_` excluded.
std::vector<std::string> pattern_vars(const Term& pattern);

/// Unique substitution theta with theta(pattern) = value, or nullopt.
std::optional<Subst> match_value(const TermPtr& value, const TermPtr& pattern);

}  // namespace sigpi
