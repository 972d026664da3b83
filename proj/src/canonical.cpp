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

#include "sigpi/canonical.hpp"

#include <algorithm>
#include <map>

#include "sigpi/eval.hpp"
#include "sigpi/printer.hpp"

namespace sigpi {

std::string bound_name(int k) { return "#" + std::to_string(k); }

namespace {

bool is_halt(const Proc& p) {
    const auto* c = std::get_if<Call>(&p.node);
    return c && c->thread == kHaltThread && c->args.empty();
}

struct Component {
    ProcPtr proc;
    std::set<std::string> names;
};

class Canonicalizer {
  public:
    Canonicalizer(const Module& defs, const CanonicalOptions& opts) : defs_(defs), opts_(opts) {}

    CanonicalState run(const std::vector<std::string>& bound, const std::vector<ProcPtr>& input) {
        for (const auto& p : input)
            for (const auto& n : free_names(*p)) avoid_.insert(n);
        Subst hoist;
        for (const auto& b : bound) hoist[b] = make_var(fresh_temp());
        for (const auto& p : input) flatten(hoist.empty() ? p : substitute(p, hoist));

        dedupe_emitters();
        collect_dead();
        return label();
    }

  private:
    const Module& defs_;
    const CanonicalOptions& opts_;
    std::set<std::string> avoid_;
    std::vector<std::string> temps_;
    std::vector<Component> comps_;
    int counter_ = 0;

    std::string fresh_temp() {
        std::string name;
        do name = "$" + std::to_string(counter_++);
        while (avoid_.count(name));
        temps_.push_back(name);
        return name;
    }

    void flatten(const ProcPtr& p) {
        if (const auto* par = std::get_if<Par>(&p->node)) {
            for (const auto& q : par->parts) flatten(q);
            return;
        }
        if (const auto* n = std::get_if<New>(&p->node)) {
            flatten(substitute(n->body, Subst{{n->signal, make_var(fresh_temp())}}));
            return;
        }
        if (std::holds_alternative<Nil>(p->node) || is_halt(*p)) return;
        ProcPtr q = p;
        if (const auto* e = std::get_if<Emit>(&p->node)) {
            if (!is_value(*e->value)) q = make_emit(e->signal, eval_expr(e->value, defs_));
        } else {
            q = normalize_binders(p, "%");
        }
        comps_.push_back(Component{q, free_names(*q)});
    }

    void dedupe_emitters() {
        std::set<std::string> seen;
        std::vector<Component> kept;
        for (auto& c : comps_) {
            if (std::holds_alternative<Emit>(c.proc->node) && !seen.insert(to_string(c.proc)).second) continue;
            kept.push_back(std::move(c));
        }
        comps_ = std::move(kept);
    }

    // Drops restricted names that are only ever emitted on by emitters
    // whose subject is itself such a name: nobody can read them, and
    // they vanish at the end of the instant.
    void collect_dead() {
        std::set<std::string> dead(temps_.begin(), temps_.end());
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& c : comps_) {
                const auto* e = std::get_if<Emit>(&c.proc->node);
                if (e && dead.count(e->signal)) continue;
                for (const auto& n : c.names) changed |= dead.erase(n) > 0;
            }
        }
        if (dead.empty()) return;
        std::vector<Component> kept;
        for (auto& c : comps_) {
            const auto* e = std::get_if<Emit>(&c.proc->node);
            if (e && dead.count(e->signal)) continue;
            kept.push_back(std::move(c));
        }
        comps_ = std::move(kept);
        std::erase_if(temps_, [&](const std::string& t) { return dead.count(t) > 0; });
    }

    std::string print_renamed(const Component& c, const std::map<std::string, std::string>& names) {
        Subst s;
        for (const auto& n : c.names) {
            auto it = names.find(n);
            if (it != names.end()) s[n] = make_var(it->second);
        }
        return to_string(s.empty() ? c.proc : substitute(c.proc, s));
    }

    CanonicalState label() {
        // Names to number: hoisted restrictions, then anonymous free names.
        std::vector<std::string> names = temps_;
        std::map<std::string, char> group;
        for (const auto& t : temps_) group[t] = '#';
        if (opts_.anonymous_prefix) {
            std::set<std::string> anon;
            for (const auto& c : comps_)
                for (const auto& n : c.names)
                    if (!n.empty() && n[0] == opts_.anonymous_prefix && !group.count(n)) anon.insert(n);
            for (const auto& n : anon) {
                names.push_back(n);
                group[n] = opts_.anonymous_prefix;
            }
        }

        std::map<std::string, int> color;
        for (const auto& n : names) color[n] = 0;
        std::size_t classes = names.empty() ? 0 : 1;
        while (!names.empty()) {
            std::map<std::string, std::string> sig;
            for (const auto& n : names) {
                std::vector<std::string> views;
                for (const auto& c : comps_) {
                    if (!c.names.count(n)) continue;
                    std::map<std::string, std::string> view;
                    for (const auto& m : c.names)
                        if (group.count(m)) view[m] = m == n ? std::string("~!") : "~" + std::to_string(color[m]);
                    views.push_back(print_renamed(c, view));
                }
                std::sort(views.begin(), views.end());
                std::string s = std::string(1, group[n]) + std::to_string(color[n]);
                for (const auto& v : views) s += '\n' + v;
                sig[n] = std::move(s);
            }
            std::vector<std::string> distinct;
            for (const auto& [n, s] : sig) distinct.push_back(s);
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (const auto& n : names)
                color[n] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[n]) - distinct.begin());
            if (distinct.size() == classes) break;
            classes = distinct.size();
        }

        std::map<int, std::vector<std::string>> by_color;
        for (const auto& n : names) by_color[color[n]].push_back(n);
        std::vector<std::vector<std::string>> cells;
        std::size_t candidates = 1;
        for (auto& [c, cell] : by_color) {
            for (std::size_t k = 2; k <= cell.size() && candidates <= opts_.max_labelings; ++k) candidates *= k;
            cells.push_back(std::move(cell));
        }
        bool exhaustive = candidates <= opts_.max_labelings;

        CanonicalState best;
        bool have = false;
        auto consider = [&]() {
            std::map<std::string, std::string> rename;
            std::map<char, int> next;
            for (const auto& cell : cells)
                for (const auto& n : cell) {
                    char g = group[n];
                    rename[n] = std::string(1, g) + std::to_string(next[g]++);
                }
            std::vector<std::pair<std::string, ProcPtr>> printed;
            for (const auto& c : comps_) {
                Subst s;
                for (const auto& n : c.names)
                    if (rename.count(n)) s[n] = make_var(rename[n]);
                auto p = s.empty() ? c.proc : substitute(c.proc, s);
                printed.emplace_back(to_string(p), p);
            }
            std::sort(printed.begin(), printed.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            CanonicalState st;
            st.nbound = static_cast<int>(temps_.size());
            for (auto& [s, p] : printed) st.components.push_back(p);
            st.key = to_string(to_process(st));
            if (!have || st.key < best.key) {
                best = std::move(st);
                have = true;
            }
        };

        if (!exhaustive) {
            consider();
            return best;
        }
        for (auto& cell : cells) std::sort(cell.begin(), cell.end());
        // Odometer over the permutations of every cell.
        while (true) {
            consider();
            std::size_t i = 0;
            for (; i < cells.size(); ++i) {
                if (std::next_permutation(cells[i].begin(), cells[i].end())) break;
            }
            if (i == cells.size()) break;
        }
        return best;
    }
};

}  // namespace

CanonicalState canonicalize(const std::vector<std::string>& bound, const std::vector<ProcPtr>& components,
                            const Module& defs, const CanonicalOptions& opts) {
    return Canonicalizer(defs, opts).run(bound, components);
}

CanonicalState canonicalize(const ProcPtr& p, const Module& defs, const CanonicalOptions& opts) {
    return canonicalize({}, {p}, defs, opts);
}

ProcPtr to_process(const CanonicalState& s) {
    ProcPtr body = make_par(s.components);
    for (int k = s.nbound - 1; k >= 0; --k) body = make_new(bound_name(k), body);
    return body;
}

bool struct_equiv(const ProcPtr& p, const ProcPtr& q, const Module& defs) {
    return canonicalize(p, defs).key == canonicalize(q, defs).key;
}

bool equal_up_to_extrusion(const CanonicalState& a, const CanonicalState& b, const Module& defs) {
    CanonicalOptions opts;
    opts.anonymous_prefix = '@';
    return canonicalize(to_process(a), defs, opts).key == canonicalize(to_process(b), defs, opts).key;
}

std::set<std::string> free_names(const CanonicalState& s) {
    std::set<std::string> out;
    for (const auto& c : s.components)
        for (const auto& n : free_names(*c)) out.insert(n);
    for (int k = 0; k < s.nbound; ++k) out.erase(bound_name(k));
    return out;
}

}  // namespace sigpi
