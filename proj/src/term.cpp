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

#include "sigpi/term.hpp"

#include <algorithm>
#include <cctype>

namespace sigpi {

TermPtr make_var(std::string name) {
    return std::make_shared<const Term>(Term{Term::Kind::Var, std::move(name), {}});
}

TermPtr make_ctor(std::string name, std::vector<TermPtr> args) {
    return std::make_shared<const Term>(Term{Term::Kind::Ctor, std::move(name), std::move(args)});
}

TermPtr make_fun(std::string name, std::vector<TermPtr> args) {
    return std::make_shared<const Term>(Term{Term::Kind::Fun, std::move(name), std::move(args)});
}

TermPtr make_deref(std::string signal) {
    return std::make_shared<const Term>(Term{Term::Kind::Deref, std::move(signal), {}});
}

TermPtr make_unit() { return make_ctor(kUnitCtor); }

TermPtr make_list(const std::vector<TermPtr>& items) {
    TermPtr list = make_ctor(kNilCtor);
    for (auto it = items.rbegin(); it != items.rend(); ++it) list = make_ctor(kConsCtor, {*it, list});
    return list;
}

bool is_value(const Term& t) {
    switch (t.kind) {
    case Term::Kind::Var: return true;
    case Term::Kind::Ctor:
        return std::all_of(t.args.begin(), t.args.end(), [](const TermPtr& a) { return is_value(*a); });
    default: return false;
    }
}

bool has_deref(const Term& t) {
    if (t.kind == Term::Kind::Deref) return true;
    return std::any_of(t.args.begin(), t.args.end(), [](const TermPtr& a) { return has_deref(*a); });
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->name != b->name || a->args.size() != b->args.size()) return false;
    for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!term_equal(a->args[i], b->args[i])) return false;
    return true;
}

namespace {

bool is_nil(const Term& t) { return t.kind == Term::Kind::Ctor && t.name == kNilCtor && t.args.empty(); }
bool is_cons(const Term& t) { return t.kind == Term::Kind::Ctor && t.name == kConsCtor && t.args.size() == 2; }

bool is_proper_list(const Term& t) {
    const Term* cur = &t;
    while (is_cons(*cur)) cur = cur->args[1].get();
    return is_nil(*cur);
}

void print(const Term& t, std::string& out) {
    switch (t.kind) {
    case Term::Kind::Var: out += t.name; return;
    case Term::Kind::Deref: out += '!'; out += t.name; return;
    case Term::Kind::Ctor:
        if (is_nil(t)) { out += "[]"; return; }
        if (is_cons(t)) {
            if (is_proper_list(t)) {
                out += '[';
                const Term* cur = &t;
                bool first = true;
                while (is_cons(*cur)) {
                    if (!first) out += "; ";
                    first = false;
                    print(*cur->args[0], out);
                    cur = cur->args[1].get();
                }
                out += ']';
                return;
            }
            bool paren = is_cons(*t.args[0]) && !is_proper_list(*t.args[0]);
            if (paren) out += '(';
            print(*t.args[0], out);
            if (paren) out += ')';
            out += " :: ";
            print(*t.args[1], out);
            return;
        }
        [[fallthrough]];
    case Term::Kind::Fun:
        out += t.name;
        if (t.args.empty() && t.kind == Term::Kind::Ctor) return;
        out += '(';
        for (std::size_t i = 0; i < t.args.size(); ++i) {
            if (i) out += ", ";
            print(*t.args[i], out);
        }
        out += ')';
        return;
    }
}

// Names like "#10" compare numerically against "#2".
bool name_less(const std::string& a, const std::string& b) {
    auto numeric_tail = [](const std::string& s) {
        return s.size() > 1 && !std::isalpha(static_cast<unsigned char>(s[0])) &&
               std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    if (numeric_tail(a) && numeric_tail(b) && a[0] == b[0]) {
        if (a.size() != b.size()) return a.size() < b.size();
    }
    return a < b;
}

}  // namespace

std::string to_string(const Term& t) {
    std::string out;
    print(t, out);
    return out;
}

bool term_less(const TermPtr& a, const TermPtr& b) {
    if (a->kind != b->kind) return static_cast<int>(a->kind) < static_cast<int>(b->kind);
    if (a->name != b->name) return name_less(a->name, b->name);
    if (a->args.size() != b->args.size()) return a->args.size() < b->args.size();
    for (std::size_t i = 0; i < a->args.size(); ++i) {
        if (term_less(a->args[i], b->args[i])) return true;
        if (term_less(b->args[i], a->args[i])) return false;
    }
    return false;
}

void collect_names(const Term& t, std::set<std::string>& out) {
    if (t.kind == Term::Kind::Var || t.kind == Term::Kind::Deref) out.insert(t.name);
    for (const auto& a : t.args) collect_names(*a, out);
}

std::set<std::string> names_of(const Term& t) {
    std::set<std::string> out;
    collect_names(t, out);
    return out;
}

TermPtr substitute(const TermPtr& t, const Subst& theta) {
    switch (t->kind) {
    case Term::Kind::Var: {
        auto it = theta.find(t->name);
        return it == theta.end() ? t : it->second;
    }
    case Term::Kind::Deref: {
        auto it = theta.find(t->name);
        if (it != theta.end() && it->second->kind == Term::Kind::Var) return make_deref(it->second->name);
        return t;
    }
    default: break;
    }
    if (t->args.empty()) return t;
    std::vector<TermPtr> args;
    args.reserve(t->args.size());
    bool changed = false;
    for (const auto& a : t->args) {
        args.push_back(substitute(a, theta));
        changed = changed || args.back() != a;
    }
    if (!changed) return t;
    return std::make_shared<const Term>(Term{t->kind, t->name, std::move(args)});
}

TermPtr rename(const TermPtr& t, const std::map<std::string, std::string>& renaming) {
    if (t->kind == Term::Kind::Var || t->kind == Term::Kind::Deref) {
        auto it = renaming.find(t->name);
        if (it == renaming.end()) return t;
        return std::make_shared<const Term>(Term{t->kind, it->second, {}});
    }
    if (t->args.empty()) return t;
    std::vector<TermPtr> args;
    args.reserve(t->args.size());
    bool changed = false;
    for (const auto& a : t->args) {
        args.push_back(rename(a, renaming));
        changed = changed || args.back() != a;
    }
    if (!changed) return t;
    return std::make_shared<const Term>(Term{t->kind, t->name, std::move(args)});
}

std::vector<std::string> pattern_vars(const Term& pattern) {
    std::vector<std::string> out;
    if (pattern.kind == Term::Kind::Var) {
        if (pattern.name != kWildcard) out.push_back(pattern.name);
        return out;
    }
    for (const auto& a : pattern.args) {
        auto sub = pattern_vars(*a);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

namespace {

bool match_into(const TermPtr& value, const TermPtr& pattern, Subst& theta) {
    if (pattern->kind == Term::Kind::Var) {
        if (pattern->name != kWildcard) theta[pattern->name] = value;
        return true;
    }
    if (value->kind != Term::Kind::Ctor || value->name != pattern->name || value->args.size() != pattern->args.size())
        return false;
    for (std::size_t i = 0; i < value->args.size(); ++i)
        if (!match_into(value->args[i], pattern->args[i], theta)) return false;
    return true;
}

}  // namespace

std::optional<Subst> match_value(const TermPtr& value, const TermPtr& pattern) {
    Subst theta;
    if (!match_into(value, pattern, theta)) return std::nullopt;
    return theta;
}

}  // namespace sigpi
