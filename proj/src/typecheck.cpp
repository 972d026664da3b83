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

#include "sigpi/typecheck.hpp"


namespace sigpi {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

using Env = std::map<std::string, TypePtr>;

class Checker {
  public:
    explicit Checker(const Module& m) : m_(m) {}

    TypeReport run(const ProcPtr& extra) {
        check_declarations();
        for (const auto& [name, def] : m_.threads) {
            auto& params = thread_params_[name];
            for (std::size_t i = 0; i < def.params.size(); ++i) params.push_back(fresh());
        }
        for (const auto& [name, type] : m_.signals) globals_[name] = type;
        declared_ = globals_;
        for (const auto& name : m_.function_order) check_function(m_.functions.at(name));
        for (const auto& name : m_.thread_order) check_thread(m_.threads.at(name));
        if (m_.main) check_closed("main", m_.main);
        if (extra) check_closed("process", extra);
        check_inputs();

        TypeReport report;
        for (const auto& name : m_.thread_order) {
            const auto& def = m_.threads.at(name);
            for (std::size_t i = 0; i < def.params.size(); ++i)
                report.bindings[name + "." + def.params[i]] = to_string(zonk(thread_params_[name][i]));
        }
        for (const auto& [name, type] : globals_) report.bindings["main." + name] = to_string(zonk(type));
        report.errors = std::move(errors_);
        return report;
    }

  private:
    const Module& m_;
    std::map<int, TypePtr> sub_;
    int next_var_ = 1;
    std::map<std::string, std::vector<TypePtr>> thread_params_;
    Env globals_;
    Env declared_;
    std::vector<std::string> errors_;
    std::string where_;

    TypePtr fresh() { return var_type(next_var_++); }

    void error(const std::string& msg) { errors_.push_back(where_.empty() ? msg : "in " + where_ + ": " + msg); }

    TypePtr resolve(TypePtr t) const {
        while (t->kind == Type::Kind::Var) {
            auto it = sub_.find(t->var);
            if (it == sub_.end()) break;
            t = it->second;
        }
        return t;
    }

    TypePtr zonk(const TypePtr& t) const {
        auto r = resolve(t);
        if (r->kind == Type::Kind::Sig) return sig_type(zonk(r->arg));
        if (r->kind == Type::Kind::List) return list_type(zonk(r->arg));
        return r;
    }

    bool occurs(int v, const TypePtr& t) const {
        auto r = resolve(t);
        if (r->kind == Type::Kind::Var) return r->var == v;
        return r->arg && occurs(v, r->arg);
    }

    bool unify(const TypePtr& a, const TypePtr& b) {
        auto x = resolve(a);
        auto y = resolve(b);
        if (x->kind == Type::Kind::Var && y->kind == Type::Kind::Var && x->var == y->var) return true;
        if (x->kind == Type::Kind::Var) {
            if (occurs(x->var, y)) return false;
            sub_[x->var] = y;
            return true;
        }
        if (y->kind == Type::Kind::Var) return unify(y, x);
        if (x->kind != y->kind) return false;
        switch (x->kind) {
        case Type::Kind::Unit: return true;
        case Type::Kind::Named: return x->name == y->name;
        default: return unify(x->arg, y->arg);
        }
    }

    void expect(const TypePtr& actual, const TypePtr& expected, const std::string& what) {
        if (!unify(actual, expected))
            error("type mismatch in " + what + ": expected " + to_string(zonk(expected)) + ", found " +
                  to_string(zonk(actual)));
    }

    TypePtr instantiate(const TypePtr& t, std::map<int, TypePtr>& inst) {
        switch (t->kind) {
        case Type::Kind::Var: {
            auto it = inst.find(t->var);
            if (it != inst.end()) return it->second;
            return inst[t->var] = fresh();
        }
        case Type::Kind::Sig: return sig_type(instantiate(t->arg, inst));
        case Type::Kind::List: return list_type(instantiate(t->arg, inst));
        default: return t;
        }
    }

    bool known_type(const TypePtr& t) const {
        switch (t->kind) {
        case Type::Kind::Named:
            if (t->name == "bool") return true;
            for (const auto& d : m_.types)
                if (d.name == t->name) return true;
            return false;
        case Type::Kind::Sig:
        case Type::Kind::List: return known_type(t->arg);
        default: return true;
        }
    }

    void check_declarations() {
        where_.clear();
        auto check = [&](const TypePtr& t, const std::string& owner) {
            if (!known_type(t)) error("unknown type " + to_string(*t) + " in " + owner);
        };
        for (const auto& [name, c] : m_.ctors)
            for (const auto& a : c.args) check(a, "constructor " + name);
        for (const auto& [name, f] : m_.functions) {
            for (const auto& p : f.params) check(p, "function " + name);
            check(f.result, "function " + name);
        }
        for (const auto& [name, t] : m_.signals) check(t, "signal " + name);
    }

    TypePtr lookup(const std::string& name, const Env& env) {
        auto it = env.find(name);
        if (it != env.end()) return it->second;
        error("unbound name " + name);
        return fresh();
    }

    TypePtr term(const Term& t, Env& env) {
        switch (t.kind) {
        case Term::Kind::Var: return lookup(t.name, env);
        case Term::Kind::Deref: {
            auto s = resolve(lookup(t.name, env));
            if (s->kind == Type::Kind::Var) {
                auto carried = fresh();
                unify(s, sig_type(carried));
                return list_type(carried);
            }
            if (s->kind != Type::Kind::Sig) {
                error("dereference of non-signal " + t.name + " : " + to_string(zonk(s)));
                return fresh();
            }
            return list_type(s->arg);
        }
        case Term::Kind::Ctor: {
            const ConstructorDef* c = m_.find_ctor(t.name);
            if (!c) {
                error("unknown constructor " + t.name);
                return fresh();
            }
            std::map<int, TypePtr> inst;
            return apply(t, c->args, c->result, "constructor " + t.name, env, inst);
        }
        case Term::Kind::Fun: {
            const FunctionDef* f = m_.find_function(t.name);
            if (!f) {
                error("unknown function " + t.name);
                return fresh();
            }
            std::map<int, TypePtr> inst;
            return apply(t, f->params, f->result, "function " + t.name, env, inst);
        }
        }
        return fresh();
    }

    TypePtr apply(const Term& t, const std::vector<TypePtr>& params, const TypePtr& result, const std::string& what,
                  Env& env, std::map<int, TypePtr>& inst) {
        if (params.size() != t.args.size()) {
            error("arity error: " + what + " expects " + std::to_string(params.size()) + " arguments, given " +
                  std::to_string(t.args.size()));
            return instantiate(result, inst);
        }
        for (std::size_t i = 0; i < params.size(); ++i)
            expect(term(*t.args[i], env), instantiate(params[i], inst),
                   "argument " + std::to_string(i + 1) + " of " + what);
        return instantiate(result, inst);
    }

    // Pattern binders receive fresh types recorded in `env`.
    TypePtr pattern(const Term& p, Env& env) {
        if (p.kind == Term::Kind::Var) {
            auto t = fresh();
            if (p.name != kWildcard) env[p.name] = t;
            return t;
        }
        const ConstructorDef* c = m_.find_ctor(p.name);
        if (!c || p.kind != Term::Kind::Ctor) {
            error("invalid pattern head " + p.name);
            return fresh();
        }
        std::map<int, TypePtr> inst;
        if (c->args.size() != p.args.size()) {
            error("arity error: constructor " + p.name + " expects " + std::to_string(c->args.size()) +
                  " arguments in pattern");
            return instantiate(c->result, inst);
        }
        for (std::size_t i = 0; i < c->args.size(); ++i)
            expect(pattern(*p.args[i], env), instantiate(c->args[i], inst), "pattern " + to_string(p));
        return instantiate(c->result, inst);
    }

    TypePtr signal(const std::string& name, const Env& env, const std::string& what) {
        auto t = lookup(name, env);
        auto carried = fresh();
        expect(t, sig_type(carried), what);
        return carried;
    }

    void call(const Call& c, Env& env) {
        auto it = thread_params_.find(c.thread);
        if (it == thread_params_.end()) {
            error("unknown thread " + c.thread);
            return;
        }
        if (it->second.size() != c.args.size()) {
            error("arity error: thread " + c.thread + " expects " + std::to_string(it->second.size()) +
                  " arguments, given " + std::to_string(c.args.size()));
            return;
        }
        for (std::size_t i = 0; i < c.args.size(); ++i)
            expect(term(*c.args[i], env), it->second[i],
                   "argument " + std::to_string(i + 1) + " of " + c.thread);
    }

    void proc(const Proc& p, Env env) {
        std::visit(Overloaded{
                       [&](const Nil&) {},
                       [&](const Call& c) { call(c, env); },
                       [&](const Emit& e) {
                           auto carried = signal(e.signal, env, "emit on " + e.signal);
                           expect(term(*e.value, env), carried, "emitted value on " + e.signal);
                       },
                       [&](const Present& pr) {
                           auto carried = signal(pr.signal, env, "present on " + pr.signal);
                           Env inner = env;
                           inner[pr.var] = carried;
                           proc(*pr.body, inner);
                           call(pr.cont, env);
                       },
                       [&](const MatchSig& m) {
                           auto a = signal(m.lhs, env, "signal comparison");
                           auto b = signal(m.rhs, env, "signal comparison");
                           expect(b, a, "signal comparison " + m.lhs + " = " + m.rhs);
                           proc(*m.then_branch, env);
                           proc(*m.else_branch, env);
                       },
                       [&](const MatchVal& m) {
                           auto subject = term(*m.subject, env);
                           Env inner = env;
                           expect(pattern(*m.pattern, inner), subject, "match on " + to_string(m.subject));
                           proc(*m.then_branch, inner);
                           proc(*m.else_branch, env);
                       },
                       [&](const New& n) {
                           Env inner = env;
                           inner[n.signal] = sig_type(fresh());
                           proc(*n.body, inner);
                       },
                       [&](const Par& par) {
                           for (const auto& q : par.parts) proc(*q, env);
                       },
                   },
                   p.node);
    }

    void check_thread(const ThreadDef& def) {
        where_ = "thread " + def.name;
        // Declared signals are visible in thread bodies; parameters shadow them.
        Env env = declared_;
        for (std::size_t i = 0; i < def.params.size(); ++i) env[def.params[i]] = thread_params_[def.name][i];
        proc(*def.body, env);
    }

    void check_function(const FunctionDef& f) {
        where_ = "function " + f.name;
        for (const auto& eq : f.equations) {
            if (eq.patterns.size() != f.params.size()) {
                error("arity error: equation has " + std::to_string(eq.patterns.size()) + " patterns, expected " +
                      std::to_string(f.params.size()));
                continue;
            }
            Env env;
            for (std::size_t i = 0; i < f.params.size(); ++i)
                expect(pattern(*eq.patterns[i], env), f.params[i], "pattern " + std::to_string(i + 1));
            expect(term(*eq.body, env), f.result, "equation body");
        }
    }

    void check_closed(const std::string& what, const ProcPtr& p) {
        where_ = what;
        for (const auto& name : free_names(*p))
            if (!globals_.count(name)) globals_[name] = sig_type(fresh());
        proc(*p, globals_);
    }

    void check_inputs() {
        where_ = "input declarations";
        for (const auto& decl : m_.inputs) {
            if (!globals_.count(decl.signal)) globals_[decl.signal] = sig_type(fresh());
            auto carried = signal(decl.signal, globals_, "input " + decl.signal);
            for (const auto& v : decl.values) {
                if (!is_value(*v)) {
                    error("input value " + to_string(v) + " is not a value");
                    continue;
                }
                for (const auto& n : names_of(*v))
                    if (!globals_.count(n)) globals_[n] = sig_type(fresh());
                expect(term(*v, globals_), carried, "input " + decl.signal);
            }
        }
    }
};

}  // namespace

TypeReport typecheck(const Module& m) { return Checker(m).run(nullptr); }

TypeReport typecheck(const Module& m, const ProcPtr& extra) { return Checker(m).run(extra); }

}  // namespace sigpi
