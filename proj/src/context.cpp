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

#include <deque>
#include <stdexcept>

#include "sigpi/equiv.hpp"
#include "sigpi/printer.hpp"

namespace sigpi {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

Call rename_call(const Call& c, const std::map<std::string, std::string>& names) {
    auto it = names.find(c.thread);
    return Call{it == names.end() ? c.thread : it->second, c.args};
}

ProcPtr rename_threads(const ProcPtr& p, const std::map<std::string, std::string>& names) {
    return std::visit(
        Overloaded{
            [&](const Nil&) { return p; },
            [&](const Emit&) { return p; },
            [&](const Call& c) {
                auto r = rename_call(c, names);
                return make_call(r.thread, r.args);
            },
            [&](const Present& pr) {
                return make_present(pr.signal, pr.var, rename_threads(pr.body, names), rename_call(pr.cont, names));
            },
            [&](const MatchSig& m) {
                return make_match_sig(m.lhs, m.rhs, rename_threads(m.then_branch, names),
                                      rename_threads(m.else_branch, names));
            },
            [&](const MatchVal& m) {
                return make_match_val(m.subject, m.pattern, rename_threads(m.then_branch, names),
                                      rename_threads(m.else_branch, names));
            },
            [&](const New& n) { return make_new(n.signal, rename_threads(n.body, names)); },
            [&](const Par& par) {
                std::vector<ProcPtr> parts;
                for (const auto& q : par.parts) parts.push_back(rename_threads(q, names));
                return make_par(std::move(parts));
            },
        },
        p->node);
}

std::string describe_ctor(const ConstructorDef& c) {
    std::string s = c.name + "(";
    for (const auto& a : c.args) s += to_string(*a) + ",";
    return s + ")->" + to_string(*c.result);
}

std::string describe_function(const FunctionDef& f) {
    std::string s;
    for (const auto& p : f.params) s += to_string(*p) + ",";
    s += "->" + to_string(*f.result);
    for (const auto& eq : f.equations) {
        s += ";";
        for (const auto& p : eq.patterns) s += to_string(p) + ",";
        s += "=" + to_string(eq.body);
    }
    return s;
}

std::string describe_thread(const ThreadDef& d) {
    std::string s;
    for (const auto& p : d.params) s += p + ",";
    return s + "=" + to_string(d.body);
}

}  // namespace

ProcPtr Context::fill(const ProcPtr& hole) const {
    ProcPtr cur = hole;
    for (const auto& layer : layers)
        cur = layer.restrict ? make_new(layer.name, cur) : make_par({cur, layer.component});
    return cur;
}

std::string Context::describe() const {
    std::string text = to_string(fill(make_call("HOLE", {})));
    auto pos = text.find("HOLE()");
    if (pos != std::string::npos) text.replace(pos, 6, "[ ]");
    return text;
}

std::vector<Context> enumerate_contexts(const std::vector<std::string>& signals, const Alphabet& a,
                                        const std::vector<ProcPtr>& fragments, std::size_t size_cap) {
    std::vector<Context::Layer> choices;
    for (const auto& [s, v] : a) choices.push_back({false, "", make_emit(s, v)});
    for (const auto& s : signals)
        for (const auto& [t, w] : a)
            choices.push_back({false, "", make_present(s, "x", make_emit(t, w), Call{kHaltThread, {}})});
    for (const auto& f : fragments) choices.push_back({false, "", f});
    for (const auto& s : signals) choices.push_back({true, s, nullptr});

    std::vector<Context> out{Context{}};
    std::size_t begin = 0;
    for (std::size_t size = 1; size <= size_cap; ++size) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (const auto& c : choices) {
                Context next = out[i];
                next.layers.push_back(c);
                out.push_back(std::move(next));
            }
        begin = end;
    }
    return out;
}

FalsifierResult context_falsifier(const ProcPtr& p, const ProcPtr& q, const Module& defs, const Alphabet& a,
                                  const Bounds& b, const std::vector<Context>& contexts) {
    FalsifierResult res;
    for (const auto& c : contexts) {
        ++res.tried;
        auto r = bisim(c.fill(p), c.fill(q), defs, a, b);
        if (r.verdict == Verdict::Distinguished) {
            res.distinguishing = c;
            return res;
        }
        if (r.verdict != Verdict::Equivalent) ++res.inconclusive;
    }
    return res;
}

std::optional<bool> weak_susp(const ProcPtr& p, const Module& defs, const Bounds& b) {
    auto root = canonicalize(p, defs);
    std::set<std::string> seen{root.key};
    std::deque<CanonicalState> queue{root};
    while (!queue.empty()) {
        auto s = std::move(queue.front());
        queue.pop_front();
        if (suspended(s, defs)) return true;
        for (auto& st : nested_steps(s, defs)) {
            if (st.action.kind != Action::Kind::Tau || !seen.insert(st.target.key).second) continue;
            if (seen.size() > b.max_states) return std::nullopt;
            queue.push_back(std::move(st.target));
        }
    }
    return false;
}

std::set<std::string> commitment(const CanonicalState& p, const Module& defs) {
    std::set<std::string> out;
    for (const auto& st : nested_steps(p, defs))
        if (st.action.kind == Action::Kind::Out) out.insert(st.action.signal);
    return out;
}

Module merge_modules(const Module& a, const Module& b, ProcPtr& b_main) {
    Module m = a;
    for (const auto& t : b.types) {
        auto it = std::find_if(m.types.begin(), m.types.end(), [&](const TypeDef& d) { return d.name == t.name; });
        if (it == m.types.end()) m.types.push_back(t);
        else if (it->ctors != t.ctors) throw std::runtime_error("conflicting definitions of type " + t.name);
    }
    for (const auto& [name, c] : b.ctors) {
        auto it = m.ctors.find(name);
        if (it == m.ctors.end()) m.ctors[name] = c;
        else if (describe_ctor(it->second) != describe_ctor(c))
            throw std::runtime_error("conflicting definitions of constructor " + name);
    }
    for (const auto& name : b.function_order) {
        const auto& f = b.functions.at(name);
        auto it = m.functions.find(name);
        if (it == m.functions.end()) {
            m.functions[name] = f;
            m.function_order.push_back(name);
        } else if (describe_function(it->second) != describe_function(f)) {
            throw std::runtime_error("conflicting definitions of function " + name);
        }
    }
    for (const auto& [name, t] : b.signals) {
        auto it = std::find_if(m.signals.begin(), m.signals.end(), [&](const auto& s) { return s.first == name; });
        if (it == m.signals.end()) m.signals.emplace_back(name, t);
        else if (!type_equal(it->second, t)) throw std::runtime_error("conflicting declarations of signal " + name);
    }
    auto key_set = [](const Module& x) {
        std::set<std::string> s;
        for (const auto& [sig, v] : alphabet_of(x)) s.insert(sig + ":" + to_string(v));
        return s;
    };
    if (!a.inputs.empty() && !b.inputs.empty() && key_set(a) != key_set(b))
        throw std::runtime_error("the two programs declare different input alphabets");
    if (a.inputs.empty()) m.inputs = b.inputs;

    std::map<std::string, std::string> renamed;
    for (const auto& name : b.thread_order) {
        auto it = m.threads.find(name);
        if (it == m.threads.end() || describe_thread(it->second) == describe_thread(b.threads.at(name))) continue;
        std::string fresh = name + "'";
        while (m.threads.count(fresh) || b.threads.count(fresh)) fresh += "'";
        renamed[name] = fresh;
    }
    for (const auto& name : b.thread_order) {
        ThreadDef def = b.threads.at(name);
        def.body = rename_threads(def.body, renamed);
        if (auto it = renamed.find(name); it != renamed.end()) def.name = it->second;
        else if (m.threads.count(name)) continue;
        m.add_thread(std::move(def));
    }
    if (b_main) b_main = rename_threads(b_main, renamed);
    return m;
}

}  // namespace sigpi
