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
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sigpi/term.hpp"
#include "sigpi/types.hpp"

namespace sigpi {

struct Proc;
using ProcPtr = std::shared_ptr<const Proc>;

struct Nil {};

/// Thread call `A(e1, ..., en)`; as a continuation the arguments may
/// contain dereferences `!s`.
struct Call {
    std::string thread;
    std::vector<TermPtr> args;
};

struct Emit {
    std::string signal;
    TermPtr value;
};

/// `present s(x) { body } else cont`
struct Present {
    std::string signal;
    std::string var;
    ProcPtr body;
    Call cont;
};

/// `if lhs = rhs then P else Q` on signal names.
struct MatchSig {
    std::string lhs;
    std::string rhs;
    ProcPtr then_branch;
    ProcPtr else_branch;
};

/// `match u with p -> P | _ -> Q`
struct MatchVal {
    TermPtr subject;
    TermPtr pattern;
    ProcPtr then_branch;
    ProcPtr else_branch;
};

struct New {
    std::string signal;
    ProcPtr body;
};

struct Par {
    std::vector<ProcPtr> parts;
};

struct Proc {
    std::variant<Nil, Call, Emit, Present, MatchSig, MatchVal, New, Par> node;
};

ProcPtr make_nil();
ProcPtr make_call(std::string thread, std::vector<TermPtr> args);
ProcPtr make_emit(std::string signal, TermPtr value);
ProcPtr make_present(std::string signal, std::string var, ProcPtr body, Call cont);
ProcPtr make_match_sig(std::string lhs, std::string rhs, ProcPtr then_branch, ProcPtr else_branch);
ProcPtr make_match_val(TermPtr subject, TermPtr pattern, ProcPtr then_branch, ProcPtr else_branch);
ProcPtr make_new(std::string signal, ProcPtr body);
ProcPtr make_par(std::vector<ProcPtr> parts);

inline constexpr const char* kHaltThread = "HALT";

/// `pause.K`, encoded as `new z in present z(x) { 0 } else K`.
ProcPtr make_pause(Call cont, const std::string& fresh_signal);
/// `tau.P`, encoded as the always-matching `match * with * -> P | _ -> 0`.
ProcPtr make_tau(ProcPtr body);
/// Internal choice `P + Q`: a private signal carrying both `true` and `false`
/// is read by a present whose value selects the branch.
ProcPtr make_choice(ProcPtr left, ProcPtr right, const std::string& fresh_signal);

/// Free variables; at run time these are exactly the free signal names.
std::set<std::string> free_names(const Proc& p);
bool occurs_free(const Proc& p, const std::string& name);

/// Thrown when substitution would put a non-signal value in a signal position.
class SubstitutionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Capture-avoiding substitution of values for variables.
ProcPtr substitute(const ProcPtr& p, const Subst& theta);

/// Renames every binder to `prefix` followed by a preorder index.
ProcPtr normalize_binders(const ProcPtr& p, const std::string& prefix);

// ---------------------------------------------------------------------------
// Definitions

struct ThreadDef {
    std::string name;
    std::vector<std::string> params;
    ProcPtr body;
};

struct Equation {
    std::vector<TermPtr> patterns;
    TermPtr body;
};

struct FunctionDef {
    std::string name;
    std::vector<TypePtr> params;
    TypePtr result;
    std::vector<Equation> equations;
};

struct ConstructorDef {
    std::string name;
    std::vector<TypePtr> args;
    TypePtr result;
};

struct TypeDef {
    std::string name;
    std::vector<std::string> ctors;
};

/// `input s : v1, v2;` declares environment test values for a signal.
struct InputDecl {
    std::string signal;
    std::vector<TermPtr> values;
};

/// Definition table: threads, functions, constructors and declarations,
/// plus the optional `main` program of a source file.
struct Module {
    std::vector<TypeDef> types;
    std::map<std::string, ConstructorDef> ctors;
    std::map<std::string, FunctionDef> functions;
    std::vector<std::string> function_order;
    std::map<std::string, ThreadDef> threads;
    std::vector<std::string> thread_order;
    std::vector<std::pair<std::string, TypePtr>> signals;
    std::vector<InputDecl> inputs;
    ProcPtr main;
    std::size_t fuel = 10000;

    const ThreadDef* find_thread(const std::string& name) const;
    const FunctionDef* find_function(const std::string& name) const;
    const ConstructorDef* find_ctor(const std::string& name) const;
    void add_thread(ThreadDef def);
};

/// Module holding the builtin constructors (*, nil, cons, true, false)
/// and the `HALT() = 0` thread.
Module builtin_module();
bool is_builtin_ctor(const std::string& name);

}  // namespace sigpi
