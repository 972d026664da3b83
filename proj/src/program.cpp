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

#include "sigpi/program.hpp"

#include <algorithm>

namespace sigpi {

namespace {

template <class T>
ProcPtr wrap(T node) {
    return std::make_shared<const Proc>(Proc{std::move(node)});
}

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

ProcPtr make_nil() {
    static const ProcPtr nil = wrap(Nil{});
    return nil;
}
ProcPtr make_call(std::string thread, std::vector<TermPtr> args) { return wrap(Call{std::move(thread), std::move(args)}); }
ProcPtr make_emit(std::string signal, TermPtr value) { return wrap(Emit{std::move(signal), std::move(value)}); }
ProcPtr make_present(std::string signal, std::string var, ProcPtr body, Call cont) {
    return wrap(Present{std::move(signal), std::move(var), std::move(body), std::move(cont)});
}
ProcPtr make_match_sig(std::string lhs, std::string rhs, ProcPtr then_branch, ProcPtr else_branch) {
    return wrap(MatchSig{std::move(lhs), std::move(rhs), std::move(then_branch), std::move(else_branch)});
}
ProcPtr make_match_val(TermPtr subject, TermPtr pattern, ProcPtr then_branch, ProcPtr else_branch) {
    return wrap(MatchVal{std::move(subject), std::move(pattern), std::move(then_branch), std::move(else_branch)});
}
ProcPtr make_new(std::string signal, ProcPtr body) { return wrap(New{std::move(signal), std::move(body)}); }
ProcPtr make_par(std::vector<ProcPtr> parts) {
    if (parts.empty()) return make_nil();
    if (parts.size() == 1) return parts.front();
    return wrap(Par{std::move(parts)});
}

ProcPtr make_pause(Call cont, const std::string& fresh_signal) {
    return make_new(fresh_signal, make_present(fresh_signal, fresh_signal + "x", make_nil(), std::move(cont)));
}

ProcPtr make_tau(ProcPtr body) { return make_match_val(make_unit(), make_unit(), std::move(body), make_nil()); }

ProcPtr make_choice(ProcPtr left, ProcPtr right, const std::string& fresh_signal) {
    // The selector variable is derived from the fresh signal so it cannot
    // capture names free in either branch.
    const std::string var = fresh_signal + "x";
    auto select = make_match_val(make_var(var), make_ctor("true"), std::move(left), std::move(right));
    auto reader = make_present(fresh_signal, var, select, Call{kHaltThread, {}});
    return make_new(fresh_signal, make_par({make_emit(fresh_signal, make_ctor("true")),
                                            make_emit(fresh_signal, make_ctor("false")), reader}));
}

// ---------------------------------------------------------------------------

namespace {

void free_names_into(const Proc& p, std::set<std::string>& out) {
    std::visit(Overloaded{
                   [](const Nil&) {},
                   [&](const Call& c) {
                       for (const auto& a : c.args) collect_names(*a, out);
                   },
                   [&](const Emit& e) {
                       out.insert(e.signal);
                       collect_names(*e.value, out);
                   },
                   [&](const Present& pr) {
                       out.insert(pr.signal);
                       auto inner = free_names(*pr.body);
                       inner.erase(pr.var);
                       out.insert(inner.begin(), inner.end());
                       for (const auto& a : pr.cont.args) collect_names(*a, out);
                   },
                   [&](const MatchSig& m) {
                       out.insert(m.lhs);
                       out.insert(m.rhs);
                       free_names_into(*m.then_branch, out);
                       free_names_into(*m.else_branch, out);
                   },
                   [&](const MatchVal& m) {
                       collect_names(*m.subject, out);
                       auto inner = free_names(*m.then_branch);
                       for (const auto& v : pattern_vars(*m.pattern)) inner.erase(v);
                       out.insert(inner.begin(), inner.end());
                       free_names_into(*m.else_branch, out);
                   },
                   [&](const New& n) {
                       auto inner = free_names(*n.body);
                       inner.erase(n.signal);
                       out.insert(inner.begin(), inner.end());
                   },
                   [&](const Par& par) {
                       for (const auto& q : par.parts) free_names_into(*q, out);
                   },
               },
               p.node);
}

std::string subst_signal(const std::string& name, const Subst& theta) {
    auto it = theta.find(name);
    if (it == theta.end()) return name;
    if (it->second->kind != Term::Kind::Var)
        throw SubstitutionError("non-signal value " + to_string(it->second) + " substituted for signal " + name);
    return it->second->name;
}

std::vector<TermPtr> subst_terms(const std::vector<TermPtr>& ts, const Subst& theta) {
    std::vector<TermPtr> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back(substitute(t, theta));
    return out;
}

/// Prepares the substitution for a scope introducing `binders` over `body`:
/// drops shadowed entries and freshens binders that would capture.
Subst enter_scope(const Subst& theta, const std::vector<std::string>& binders, const Proc& body,
                  std::vector<std::string>& renamed) {
    Subst inner = theta;
    for (const auto& b : binders) inner.erase(b);
    renamed = binders;
    if (inner.empty()) return inner;

    auto body_free = free_names(body);
    std::set<std::string> range;
    for (const auto& [var, value] : inner)
        if (body_free.count(var)) collect_names(*value, range);
    std::set<std::string> taken = range;
    taken.insert(body_free.begin(), body_free.end());
    for (const auto& [var, value] : inner) taken.insert(var);
    taken.insert(binders.begin(), binders.end());

    for (auto& b : renamed) {
        if (!range.count(b)) continue;
        std::string fresh = b;
        do fresh += '\'';
        while (taken.count(fresh));
        taken.insert(fresh);
        inner[b] = make_var(fresh);
        b = fresh;
    }
    return inner;
}

}  // namespace

std::set<std::string> free_names(const Proc& p) {
    std::set<std::string> out;
    free_names_into(p, out);
    return out;
}

bool occurs_free(const Proc& p, const std::string& name) { return free_names(p).count(name) > 0; }

ProcPtr substitute(const ProcPtr& p, const Subst& theta) {
    if (theta.empty()) return p;
    return std::visit(
        Overloaded{
            [&](const Nil&) { return p; },
            [&](const Call& c) { return make_call(c.thread, subst_terms(c.args, theta)); },
            [&](const Emit& e) { return make_emit(subst_signal(e.signal, theta), substitute(e.value, theta)); },
            [&](const Present& pr) {
                std::vector<std::string> renamed;
                auto inner = enter_scope(theta, {pr.var}, *pr.body, renamed);
                return make_present(subst_signal(pr.signal, theta), renamed[0], substitute(pr.body, inner),
                                    Call{pr.cont.thread, subst_terms(pr.cont.args, theta)});
            },
            [&](const MatchSig& m) {
                return make_match_sig(subst_signal(m.lhs, theta), subst_signal(m.rhs, theta),
                                      substitute(m.then_branch, theta), substitute(m.else_branch, theta));
            },
            [&](const MatchVal& m) {
                auto vars = pattern_vars(*m.pattern);
                std::vector<std::string> renamed;
                auto inner = enter_scope(theta, vars, *m.then_branch, renamed);
                std::map<std::string, std::string> pattern_renaming;
                for (std::size_t i = 0; i < vars.size(); ++i)
                    if (vars[i] != renamed[i]) pattern_renaming[vars[i]] = renamed[i];
                return make_match_val(substitute(m.subject, theta), rename(m.pattern, pattern_renaming),
                                      substitute(m.then_branch, inner), substitute(m.else_branch, theta));
            },
            [&](const New& n) {
                std::vector<std::string> renamed;
                auto inner = enter_scope(theta, {n.signal}, *n.body, renamed);
                return make_new(renamed[0], substitute(n.body, inner));
            },
            [&](const Par& par) {
                std::vector<ProcPtr> parts;
                for (const auto& q : par.parts) parts.push_back(substitute(q, theta));
                return wrap(Par{std::move(parts)});
            },
        },
        p->node);
}

namespace {

struct BinderNormalizer {
    std::string prefix;
    int counter = 0;

    std::string bind(const std::string& old, std::map<std::string, std::string>& env) {
        std::string fresh = prefix + std::to_string(counter++);
        env[old] = fresh;
        return fresh;
    }

    static std::string lookup(const std::string& name, const std::map<std::string, std::string>& env) {
        auto it = env.find(name);
        return it == env.end() ? name : it->second;
    }

    static std::vector<TermPtr> terms(const std::vector<TermPtr>& ts, const std::map<std::string, std::string>& env) {
        std::vector<TermPtr> out;
        out.reserve(ts.size());
        for (const auto& t : ts) out.push_back(rename(t, env));
        return out;
    }

    ProcPtr run(const ProcPtr& p, const std::map<std::string, std::string>& env) {
        return std::visit(
            Overloaded{
                [&](const Nil&) { return p; },
                [&](const Call& c) { return make_call(c.thread, terms(c.args, env)); },
                [&](const Emit& e) { return make_emit(lookup(e.signal, env), rename(e.value, env)); },
                [&](const Present& pr) {
                    auto inner = env;
                    auto var = bind(pr.var, inner);
                    auto body = run(pr.body, inner);
                    return make_present(lookup(pr.signal, env), var, body, Call{pr.cont.thread, terms(pr.cont.args, env)});
                },
                [&](const MatchSig& m) {
                    auto t = run(m.then_branch, env);
                    auto e = run(m.else_branch, env);
                    return make_match_sig(lookup(m.lhs, env), lookup(m.rhs, env), t, e);
                },
                [&](const MatchVal& m) {
                    auto inner = env;
                    std::map<std::string, std::string> pattern_renaming;
                    for (const auto& v : pattern_vars(*m.pattern)) pattern_renaming[v] = bind(v, inner);
                    auto t = run(m.then_branch, inner);
                    auto e = run(m.else_branch, env);
                    return make_match_val(rename(m.subject, env), rename(m.pattern, pattern_renaming), t, e);
                },
                [&](const New& n) {
                    auto inner = env;
                    auto s = bind(n.signal, inner);
                    return make_new(s, run(n.body, inner));
                },
                [&](const Par& par) {
                    std::vector<ProcPtr> parts;
                    for (const auto& q : par.parts) parts.push_back(run(q, env));
                    return wrap(Par{std::move(parts)});
                },
            },
            p->node);
    }
};

}  // namespace

ProcPtr normalize_binders(const ProcPtr& p, const std::string& prefix) {
    BinderNormalizer normalizer{prefix};
    return normalizer.run(p, {});
}

// ---------------------------------------------------------------------------

const ThreadDef* Module::find_thread(const std::string& name) const {
    auto it = threads.find(name);
    return it == threads.end() ? nullptr : &it->second;
}

const FunctionDef* Module::find_function(const std::string& name) const {
    auto it = functions.find(name);
    return it == functions.end() ? nullptr : &it->second;
}

const ConstructorDef* Module::find_ctor(const std::string& name) const {
    auto it = ctors.find(name);
    return it == ctors.end() ? nullptr : &it->second;
}

void Module::add_thread(ThreadDef def) {
    if (!threads.count(def.name)) thread_order.push_back(def.name);
    threads[def.name] = std::move(def);
}

bool is_builtin_ctor(const std::string& name) {
    return name == kUnitCtor || name == kNilCtor || name == kConsCtor || name == "true" || name == "false";
}

Module builtin_module() {
    Module m;
    auto a = var_type(0);
    m.ctors[kUnitCtor] = ConstructorDef{kUnitCtor, {}, unit_type()};
    m.ctors[kNilCtor] = ConstructorDef{kNilCtor, {}, list_type(a)};
    m.ctors[kConsCtor] = ConstructorDef{kConsCtor, {a, list_type(a)}, list_type(a)};
    m.ctors["true"] = ConstructorDef{"true", {}, named_type("bool")};
    m.ctors["false"] = ConstructorDef{"false", {}, named_type("bool")};
    m.threads[kHaltThread] = ThreadDef{kHaltThread, {}, make_nil()};
    return m;
}

}  // namespace sigpi
