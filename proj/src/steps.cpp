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

#include "sigpi/steps.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "sigpi/eval.hpp"

namespace sigpi {

const char* kind_name(Action::Kind k) {
    switch (k) {
    case Action::Kind::Tau: return "tau";
    case Action::Kind::Out: return "out";
    case Action::Kind::In: return "in";
    case Action::Kind::Next: return "next";
    case Action::Kind::AuxIn: return "aux_in";
    case Action::Kind::Pin: return "pin";
    }
    return "?";
}

std::string Action::key() const {
    std::string k = kind_name(kind);
    if (kind == Kind::Tau || kind == Kind::Next) return k;
    k += '(';
    for (const auto& t : extruded) k += t + ' ';
    k += signal + ';' + to_string(value) + ')';
    return k;
}

std::string Action::label() const {
    switch (kind) {
    case Kind::Tau: return "τ";
    case Kind::Next: return "N";
    case Kind::Out: {
        std::string l;
        if (!extruded.empty()) {
            l = "ν";
            for (std::size_t i = 0; i < extruded.size(); ++i) l += (i ? "," : "") + extruded[i];
            l += ". ";
        }
        return l + signal + "̄ " + to_string(value);
    }
    case Kind::In: return signal + " " + to_string(value);
    case Kind::AuxIn: return signal + "?" + to_string(value);
    case Kind::Pin: return signal + " " + to_string(value) + " (pin)";
    }
    return "?";
}

Alphabet alphabet_of(const Module& m) {
    Alphabet a;
    for (const auto& decl : m.inputs)
        for (const auto& v : decl.values) a.emplace_back(decl.signal, v);
    return a;
}

std::string to_string(const Alphabet& a) {
    std::string out;
    for (const auto& [s, v] : a) out += (out.empty() ? "" : ", ") + s + ":" + to_string(v);
    return out;
}

Bounds Bounds::from_env() {
    Bounds b;
    auto read = [](const char* var, std::size_t& field) {
        if (const char* s = std::getenv(var)) {
            try {
                auto v = std::stoul(s);
                if (v > 0) field = v;
            } catch (const std::exception&) {
            }
        }
    };
    read("SIGPI_MAX_STATES", b.max_states);
    read("SIGPI_MAX_DEPTH", b.max_depth);
    read("SIGPI_MAX_INSTANTS", b.max_instants);
    read("SIGPI_MAX_PERMUTATIONS", b.max_permutations);
    return b;
}

namespace {

std::vector<std::string> bound_list(const CanonicalState& p) {
    std::vector<std::string> out;
    for (int k = 0; k < p.nbound; ++k) out.push_back(bound_name(k));
    return out;
}

bool is_bound(const CanonicalState& p, const std::string& name) {
    if (name.size() < 2 || name[0] != '#') return false;
    return std::stoi(name.substr(1)) < p.nbound;
}

void ordered_names(const Term& t, std::vector<std::string>& out) {
    if (t.kind == Term::Kind::Var) {
        if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
        return;
    }
    for (const auto& a : t.args) ordered_names(*a, out);
}

CanonicalState replace(const CanonicalState& p, int i, const ProcPtr& with, const Module& defs,
                       const ProcPtr& extra = nullptr) {
    std::vector<ProcPtr> cs = p.components;
    cs[i] = with;
    if (extra) cs.push_back(extra);
    return canonicalize(bound_list(p), cs, defs);
}

TermPtr deref(const TermPtr& t, const CollectMap& v) {
    if (t->kind == Term::Kind::Deref) {
        auto it = v.find(t->name);
        return make_list(it == v.end() ? std::vector<TermPtr>{} : it->second);
    }
    if (t->args.empty()) return t;
    std::vector<TermPtr> args;
    for (const auto& a : t->args) args.push_back(deref(a, v));
    return std::make_shared<const Term>(Term{t->kind, t->name, std::move(args)});
}

TermPtr value_of(const TermPtr& e, const Module& defs) { return is_value(*e) ? e : eval_expr(e, defs); }

}  // namespace

std::vector<Step> nested_steps(const CanonicalState& p, const Module& defs, const StepFlags& flags) {
    std::vector<Step> out;
    const auto& cs = p.components;
    for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
        const Proc& c = *cs[i];
        if (const auto* e = std::get_if<Emit>(&c.node)) {
            if (is_bound(p, e->signal)) continue;
            std::vector<std::string> names;
            ordered_names(*e->value, names);
            std::vector<std::string> extruded;
            for (const auto& n : names)
                if (is_bound(p, n)) extruded.push_back(n);
            if (extruded.empty()) {
                out.push_back(Step{Action::out({}, e->signal, e->value), p, "out", i, -1});
                continue;
            }
            auto used = free_names(p);
            std::map<std::string, std::string> fresh;
            int j = 0;
            for (const auto& t : extruded) {
                while (used.count("@" + std::to_string(j))) ++j;
                fresh[t] = "@" + std::to_string(j++);
            }
            Subst theta;
            std::vector<std::string> labels;
            for (const auto& t : extruded) {
                theta[t] = make_var(fresh[t]);
                labels.push_back(fresh[t]);
            }
            std::vector<std::string> still_bound;
            for (const auto& b : bound_list(p))
                if (!fresh.count(b)) still_bound.push_back(b);
            std::vector<ProcPtr> renamed;
            for (const auto& q : cs) renamed.push_back(substitute(q, theta));
            out.push_back(Step{Action::out(labels, e->signal, substitute(e->value, theta)),
                               canonicalize(still_bound, renamed, defs), "out", i, -1});
        } else if (const auto* pr = std::get_if<Present>(&c.node)) {
            for (int k = 0; k < static_cast<int>(cs.size()); ++k) {
                const auto* em = std::get_if<Emit>(&cs[k]->node);
                if (!em || em->signal != pr->signal) continue;
                auto body = substitute(pr->body, Subst{{pr->var, em->value}});
                auto target = replace(p, i, body, defs);
                out.push_back(Step{Action::aux_in(pr->signal, em->value), target, "in_aux", i, -1});
                if (flags.reemit_on_read) target = replace(p, i, body, defs, make_emit(pr->signal, em->value));
                out.push_back(Step{Action::tau(), target, "synch", i, k});
            }
        } else if (const auto* call = std::get_if<Call>(&c.node)) {
            const ThreadDef* def = defs.find_thread(call->thread);
            if (!def) throw EvalError("unknown thread " + call->thread);
            if (def->params.size() != call->args.size())
                throw EvalError("thread " + call->thread + " called with " + std::to_string(call->args.size()) +
                                " arguments, expects " + std::to_string(def->params.size()));
            Subst theta;
            for (std::size_t k = 0; k < def->params.size(); ++k) theta[def->params[k]] = value_of(call->args[k], defs);
            out.push_back(Step{Action::tau(), replace(p, i, substitute(def->body, theta), defs), "rec", i, -1});
        } else if (const auto* m = std::get_if<MatchSig>(&c.node)) {
            bool same = m->lhs == m->rhs;
            out.push_back(Step{Action::tau(), replace(p, i, same ? m->then_branch : m->else_branch, defs),
                               same ? "sig_eq" : "sig_neq", i, -1});
        } else if (const auto* m = std::get_if<MatchVal>(&c.node)) {
            auto theta = match_value(value_of(m->subject, defs), m->pattern);
            if (theta)
                out.push_back(Step{Action::tau(), replace(p, i, substitute(m->then_branch, *theta), defs),
                                   "ind_match", i, -1});
            else
                out.push_back(Step{Action::tau(), replace(p, i, m->else_branch, defs), "ind_nomatch", i, -1});
        }
    }
    return out;
}

CanonicalState inject(const CanonicalState& p, const std::string& s, const TermPtr& v, const Module& defs) {
    std::vector<ProcPtr> cs = p.components;
    cs.push_back(make_emit(s, v));
    return canonicalize(bound_list(p), cs, defs);
}

std::vector<Step> input_steps(const CanonicalState& p, const Alphabet& a, const Module& defs) {
    std::vector<Step> out;
    for (const auto& [s, v] : a) out.push_back(Step{Action::in(s, v), inject(p, s, v, defs), "in", -1, -1});
    return out;
}

std::vector<Step> pin_steps(const CanonicalState& p, const Alphabet& a, const Module& defs) {
    std::vector<Step> out;
    for (int i = 0; i < static_cast<int>(p.components.size()); ++i) {
        const auto* pr = std::get_if<Present>(&p.components[i]->node);
        if (!pr || is_bound(p, pr->signal)) continue;
        for (const auto& [s, v] : a) {
            if (s != pr->signal) continue;
            // The value read stays emitted, as with the re-emitting read.
            auto body = make_par({substitute(pr->body, Subst{{pr->var, v}}), make_emit(s, v)});
            out.push_back(Step{Action::pin(s, v), replace(p, i, body, defs), "in_aux", i, -1});
        }
    }
    return out;
}

bool suspended(const CanonicalState& p, const Module&) {
    std::set<std::string> emitted;
    for (const auto& c : p.components)
        if (const auto* e = std::get_if<Emit>(&c->node)) emitted.insert(e->signal);
    for (const auto& c : p.components) {
        if (std::holds_alternative<Emit>(c->node)) continue;
        const auto* pr = std::get_if<Present>(&c->node);
        if (!pr || emitted.count(pr->signal)) return false;
    }
    return true;
}

std::optional<std::pair<EmissionMap, ProcPtr>> eoi_component(const ProcPtr& p, const CollectMap& v,
                                                              const Module& defs) {
    if (std::holds_alternative<Nil>(p->node)) return std::make_pair(EmissionMap{}, p);
    if (const auto* e = std::get_if<Emit>(&p->node)) {
        auto value = value_of(e->value, defs);
        auto it = v.find(e->signal);
        if (it == v.end() ||
            std::none_of(it->second.begin(), it->second.end(), [&](const TermPtr& w) { return term_equal(w, value); }))
            return std::nullopt;
        return std::make_pair(EmissionMap{{e->signal, {value}}}, make_nil());
    }
    if (const auto* pr = std::get_if<Present>(&p->node)) {
        auto it = v.find(pr->signal);
        if (it != v.end() && !it->second.empty()) return std::nullopt;
        std::vector<TermPtr> args;
        for (const auto& a : pr->cont.args) args.push_back(deref(a, v));
        return std::make_pair(EmissionMap{}, make_call(pr->cont.thread, std::move(args)));
    }
    if (const auto* par = std::get_if<Par>(&p->node)) {
        EmissionMap e;
        std::vector<ProcPtr> parts;
        for (const auto& q : par->parts) {
            auto r = eoi_component(q, v, defs);
            if (!r) return std::nullopt;
            for (auto& [s, vals] : r->first) {
                auto& dst = e[s];
                for (auto& w : vals)
                    if (std::none_of(dst.begin(), dst.end(), [&](const TermPtr& x) { return term_equal(x, w); }))
                        dst.push_back(w);
                std::sort(dst.begin(), dst.end(), term_less);
            }
            parts.push_back(r->second);
        }
        return std::make_pair(e, make_par(std::move(parts)));
    }
    return std::nullopt;
}

EmissionMap emission_map(const CanonicalState& p) {
    EmissionMap e;
    for (const auto& c : p.components)
        if (const auto* em = std::get_if<Emit>(&c->node)) e[em->signal].push_back(em->value);
    for (auto& [s, vals] : e) {
        std::sort(vals.begin(), vals.end(), term_less);
        vals.erase(std::unique(vals.begin(), vals.end(), term_equal), vals.end());
    }
    return e;
}

std::optional<CanonicalState> next_with(const CanonicalState& p, const CollectMap& v, const Module& defs) {
    std::vector<ProcPtr> cs;
    for (const auto& c : p.components) {
        auto r = eoi_component(c, v, defs);
        if (!r) return std::nullopt;
        cs.push_back(r->second);
    }
    return canonicalize(bound_list(p), cs, defs);
}

NextResult next_steps(const CanonicalState& p, const Module& defs, const Bounds& b) {
    NextResult res;
    if (!suspended(p, defs)) return res;
    EmissionMap e = emission_map(p);

    // Only the order of dereferenced signals can influence the successor.
    std::set<std::string> read;
    for (const auto& c : p.components)
        if (const auto* pr = std::get_if<Present>(&c->node))
            for (const auto& a : pr->cont.args)
                for (const auto& n : names_of(*a)) read.insert(n);
    CollectMap v = e;
    std::vector<std::string> varying;
    for (const auto& [s, vals] : e)
        if (vals.size() > 1 && read.count(s)) varying.push_back(s);

    std::set<std::string> seen;
    std::size_t tried = 0;
    while (true) {
        if (tried++ == b.max_permutations) {
            res.truncated = true;
            break;
        }
        if (auto target = next_with(p, v, defs); target && seen.insert(target->key).second)
            res.steps.push_back(Step{Action::next(), *target, "next", -1, -1});
        std::size_t i = 0;
        for (; i < varying.size(); ++i) {
            auto& l = v[varying[i]];
            if (std::next_permutation(l.begin(), l.end(), term_less)) break;
        }
        if (i == varying.size()) break;
    }
    return res;
}

RelevantResult relevant_steps(const CanonicalState& p, const Module& defs, const Alphabet& a, const Bounds& b,
                              const StepFlags& flags) {
    RelevantResult res;
    for (auto& s : nested_steps(p, defs, flags))
        if (s.action.kind != Action::Kind::AuxIn) res.steps.push_back(std::move(s));
    for (auto& s : input_steps(p, a, defs)) res.steps.push_back(std::move(s));
    if (flags.pin_edges)
        for (auto& s : pin_steps(p, a, defs)) res.steps.push_back(std::move(s));
    auto next = next_steps(p, defs, b);
    res.truncated = next.truncated;
    for (auto& s : next.steps) res.steps.push_back(std::move(s));

    std::vector<std::pair<std::string, Step>> keyed;
    for (auto& s : res.steps) keyed.emplace_back(s.action.key() + '\n' + s.target.key, std::move(s));
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    res.steps.clear();
    for (std::size_t i = 0; i < keyed.size(); ++i)
        if (i == 0 || keyed[i].first != keyed[i - 1].first) res.steps.push_back(std::move(keyed[i].second));
    return res;
}

bool compatible(const Action& a, const Action& b) {
    return (a.kind == Action::Kind::Next) == (b.kind == Action::Kind::Next);
}

Action residual(const Action& a, const Action& b) {
    if (!compatible(a, b)) throw std::invalid_argument("residual of incompatible actions " + a.key() + ", " + b.key());
    if (a == b) return Action::tau();
    if (a.kind == Action::Kind::Out && b.kind == Action::Kind::Out) {
        Action r = a;
        std::erase_if(r.extruded, [&](const std::string& t) {
            return std::find(b.extruded.begin(), b.extruded.end(), t) != b.extruded.end();
        });
        return r;
    }
    return a;
}

}  // namespace sigpi
