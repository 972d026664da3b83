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

#include "sigpi/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <deque>

#include "sigpi/equiv.hpp"

namespace sigpi {

const char* status_name(Status s) {
    switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

const AnalysisVerdict* AnalysisReport::find(const std::string& property) const {
    for (const auto& v : verdicts)
        if (v.property == property) return &v;
    return nullptr;
}

const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names = {
        "reactive", "locally_confluent", "diamond", "determinate", "confluent", "tau_inert", "strong_confluence",
    };
    return names;
}

namespace {

constexpr std::size_t kMaxSubsets = 20000;

bool extruding(const Action& a) { return a.kind == Action::Kind::Out && !a.extruded.empty(); }

}  // namespace

Analyzer::Analyzer(const CanonicalState& root, const Module& defs, const Alphabet& a, const Bounds& b)
    : defs_(defs), alphabet_(a), bounds_(b), lts_(explore({root}, defs, a, b)), weak_(lts_) {}

Analyzer::Analyzer(const ProcPtr& root, const Module& defs, const Alphabet& a, const Bounds& b)
    : Analyzer(canonicalize(root, defs), defs, a, b) {}

const std::vector<int>& Analyzer::classes() {
    if (!classes_) classes_ = self_partition(lts_, alphabet_);
    return *classes_;
}

AnalysisVerdict Analyzer::finish(AnalysisVerdict v) const {
    if (lts_.complete) return v;
    bool genuine = v.property == "reactive" && v.status == Status::Fails;
    if (!genuine) {
        v.status = Status::Inconclusive;
        v.detail = "exploration bound hit";
    }
    return v;
}

AnalysisVerdict Analyzer::reactivity() {
    AnalysisVerdict v{"reactive", Status::Holds, {}, {}, "", 0};
    std::vector<int> colour(lts_.size(), 0);
    std::vector<int> parent(lts_.size(), -1);
    for (std::size_t s = 0; s < lts_.size() && v.status == Status::Holds; ++s) {
        if (colour[s]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(s), 0}};
        colour[s] = 1;
        while (!stack.empty() && v.status == Status::Holds) {
            auto& [u, i] = stack.back();
            if (i == lts_.out[u].size()) {
                colour[u] = 2;
                stack.pop_back();
                continue;
            }
            const Edge& e = lts_.edges[lts_.out[u][i++]];
            if (e.action.kind != Action::Kind::Tau) continue;
            if (colour[e.dst] == 1) {
                v.status = Status::Fails;
                v.detail = "tau cycle";
                for (int w = u; w != e.dst; w = parent[w]) v.states.push_back(w);
                v.states.push_back(e.dst);
                std::reverse(v.states.begin(), v.states.end());
                v.states.push_back(e.dst);
                v.actions.assign(v.states.size() - 1, Action::tau().label());
            } else if (colour[e.dst] == 0) {
                colour[e.dst] = 1;
                parent[e.dst] = u;
                stack.emplace_back(e.dst, 0);
            }
        }
    }
    return finish(v);
}

AnalysisVerdict Analyzer::tau_inert() {
    AnalysisVerdict v{"tau_inert", Status::Holds, {}, {}, "", 0};
    const auto& cls = classes();
    for (const auto& e : lts_.edges)
        if (e.action.kind == Action::Kind::Tau && cls[e.src] != cls[e.dst]) {
            v.status = Status::Fails;
            v.states = {e.src, e.dst};
            v.actions = {Action::tau().label()};
            v.detail = "tau step between inequivalent states";
            break;
        }
    return finish(v);
}

AnalysisVerdict Analyzer::determinate(std::size_t max_len) {
    AnalysisVerdict v{"determinate", Status::Holds, {}, {}, "", 0};
    const auto& cls = classes();
    struct Node {
        std::vector<int> set;
        int parent;
        std::string action;
        std::size_t depth;
    };
    std::vector<Node> nodes;
    std::map<std::vector<int>, int> seen;
    std::deque<int> queue;
    bool truncated = false;
    auto add = [&](std::vector<int> set, int parent, std::string action, std::size_t depth) {
        if (seen.count(set)) return;
        seen.emplace(set, static_cast<int>(nodes.size()));
        queue.push_back(static_cast<int>(nodes.size()));
        nodes.push_back(Node{std::move(set), parent, std::move(action), depth});
    };
    for (int r : lts_.roots) add(weak_.tau[r], -1, "", 0);
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        const auto set = nodes[id].set;
        for (int x : set)
            if (cls[x] != cls[set.front()]) {
                v.status = Status::Fails;
                v.detail = "one interaction sequence reaches inequivalent states";
                for (int n = id; nodes[n].parent >= 0; n = nodes[n].parent) v.actions.push_back(nodes[n].action);
                std::reverse(v.actions.begin(), v.actions.end());
                v.states = {lts_.roots.front(), set.front(), x};
                return finish(v);
            }
        if (max_len && nodes[id].depth >= max_len) {
            truncated = truncated || !weak_.succ[set.front()].empty();
            continue;
        }
        // N is followed by its trailing tau steps: an input on a signal the
        // program never reads would expose them, and the alphabet has none.
        std::map<std::string, std::set<int>> next;
        const std::string next_key = Action::next().key();
        for (int x : set)
            for (const auto& [key, targets] : weak_.succ[x]) {
                if (key == next_key) continue;
                next[key == kRelaxedNextKey ? next_key : key].insert(targets.begin(), targets.end());
            }
        for (auto& [key, targets] : next) {
            add(std::vector<int>(targets.begin(), targets.end()), id, weak_.actions.at(key).label(),
                nodes[id].depth + 1);
            if (nodes.size() > kMaxSubsets) {
                v.status = Status::Inconclusive;
                v.detail = "too many state sets";
                return v;
            }
        }
    }
    if (truncated) {
        v.status = Status::Inconclusive;
        v.detail = "sequence length bound reached";
    }
    return finish(v);
}

AnalysisVerdict Analyzer::diamonds(const std::string& name, bool weak_challenges) {
    AnalysisVerdict v{name, Status::Holds, {}, {}, "", 0};
    const auto& cls = classes();
    auto class_set = [&](int s, const Action& a) {
        std::set<int> out;
        for (int t : weak_.weak(s, a.key())) out.insert(cls[t]);
        return out;
    };
    for (int q = 0; q < static_cast<int>(lts_.size()); ++q) {
        std::vector<std::pair<Action, int>> moves;
        if (weak_challenges) {
            for (int t : weak_.tau[q])
                if (t != q) moves.emplace_back(Action::tau(), t);
            for (const auto& [key, targets] : weak_.succ[q]) {
                if (key == kRelaxedNextKey) continue;
                for (int t : targets) moves.emplace_back(weak_.actions.at(key), t);
            }
        } else {
            for (int e : lts_.out[q]) moves.emplace_back(lts_.edges[e].action, lts_.edges[e].dst);
        }
        for (std::size_t i = 0; i < moves.size(); ++i)
            for (std::size_t j = i + 1; j < moves.size(); ++j) {
                const auto& [a, q1] = moves[i];
                const auto& [b, q2] = moves[j];
                // Extruding outputs commute by construction; checked separately.
                if (!compatible(a, b) || extruding(a) || extruding(b)) continue;
                auto s1 = class_set(q1, residual(b, a));
                auto s2 = class_set(q2, residual(a, b));
                bool joins = std::any_of(s1.begin(), s1.end(), [&](int c) { return s2.count(c) > 0; });
                if (!joins) {
                    v.status = Status::Fails;
                    v.states = {q, q1, q2};
                    v.actions = {a.label(), b.label()};
                    v.detail = "diamond does not close";
                    return finish(v);
                }
            }
    }
    return finish(v);
}

AnalysisVerdict Analyzer::confluent() { return diamonds("confluent", true); }

AnalysisVerdict Analyzer::locally_confluent() { return diamonds("locally_confluent", false); }

AnalysisVerdict Analyzer::diamond() {
    AnalysisVerdict v{"diamond", Status::Holds, {}, {}, "", 0};
    const auto& cls = classes();
    for (int q = 0; q < static_cast<int>(lts_.size()); ++q)
        for (auto kind : {Action::Kind::Tau, Action::Kind::Next}) {
            std::vector<int> targets;
            for (int e : lts_.out[q])
                if (lts_.edges[e].action.kind == kind) targets.push_back(lts_.edges[e].dst);
            for (std::size_t i = 0; i < targets.size(); ++i)
                for (std::size_t j = i + 1; j < targets.size(); ++j) {
                    std::set<int> c1;
                    for (int t : weak_.tau[targets[i]]) c1.insert(cls[t]);
                    bool joins = std::any_of(weak_.tau[targets[j]].begin(), weak_.tau[targets[j]].end(),
                                             [&](int t) { return c1.count(cls[t]) > 0; });
                    if (!joins) {
                        v.status = Status::Fails;
                        v.states = {q, targets[i], targets[j]};
                        v.actions = {kind == Action::Kind::Tau ? "τ" : "N"};
                        v.detail = "diamond does not close";
                        return finish(v);
                    }
                }
        }
    return finish(v);
}

AnalysisVerdict Analyzer::strong_confluence() {
    AnalysisVerdict v{"strong_confluence", Status::Holds, {}, {}, "", 0};
    const auto& cls = classes();
    auto reach = [&](int s) {
        std::set<int> out{s};
        for (int e : lts_.out[s])
            if (lts_.edges[e].action.kind == Action::Kind::Tau) out.insert(lts_.edges[e].dst);
        return out;
    };
    for (int q = 0; q < static_cast<int>(lts_.size()); ++q) {
        std::vector<int> taus;
        std::vector<int> nexts;
        for (int e : lts_.out[q]) {
            if (lts_.edges[e].action.kind == Action::Kind::Tau) taus.push_back(lts_.edges[e].dst);
            if (lts_.edges[e].action.kind == Action::Kind::Next) nexts.push_back(lts_.edges[e].dst);
        }
        for (std::size_t i = 0; i < taus.size(); ++i)
            for (std::size_t j = i + 1; j < taus.size(); ++j) {
                auto r1 = reach(taus[i]);
                auto r2 = reach(taus[j]);
                if (std::none_of(r1.begin(), r1.end(), [&](int s) { return r2.count(s) > 0; })) {
                    v.status = Status::Fails;
                    v.states = {q, taus[i], taus[j]};
                    v.actions = {"τ", "τ"};
                    v.detail = "tau steps have no common one-step join";
                    return finish(v);
                }
            }
        for (std::size_t i = 1; i < nexts.size(); ++i)
            if (cls[nexts[i]] != cls[nexts[0]]) {
                v.status = Status::Fails;
                v.states = {q, nexts[0], nexts[i]};
                v.actions = {"N", "N"};
                v.detail = "inequivalent N successors";
                return finish(v);
            }
    }
    return finish(v);
}

AnalysisVerdict Analyzer::check(const std::string& property) {
    auto start = std::chrono::steady_clock::now();
    AnalysisVerdict v;
    if (property == "reactive") v = reactivity();
    else if (property == "tau_inert") v = tau_inert();
    else if (property == "determinate") v = determinate();
    else if (property == "confluent") v = confluent();
    else if (property == "locally_confluent") v = locally_confluent();
    else if (property == "diamond") v = diamond();
    else if (property == "strong_confluence") v = strong_confluence();
    else throw std::invalid_argument("unknown property " + property);
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return v;
}

AnalysisReport Analyzer::all(const std::vector<std::string>& properties) {
    AnalysisReport r;
    r.alphabet = alphabet_;
    r.bounds = bounds_;
    r.states = lts_.size();
    r.complete = lts_.complete;
    for (const auto& p : properties.empty() ? property_names() : properties) r.verdicts.push_back(check(p));

    auto status = [&](const char* p) -> std::optional<bool> {
        const auto* v = r.find(p);
        if (!v || v->status == Status::Inconclusive) return std::nullopt;
        return v->status == Status::Holds;
    };
    auto implies = [&](const char* a, const char* b, const char* why) {
        auto x = status(a);
        auto y = status(b);
        if (x && y && *x && !*y) r.contradictions.push_back(std::string(a) + " holds but " + b + " fails (" + why + ")");
    };
    implies("confluent", "tau_inert", "confluence implies tau-inertness");
    implies("confluent", "determinate", "confluence implies determinacy");
    implies("determinate", "confluent", "determinacy implies confluence");
    implies("determinate", "tau_inert", "determinacy implies tau-inertness");
    implies("confluent", "locally_confluent", "confluence implies local confluence");
    implies("strong_confluence", "determinate", "strong confluence implies determinacy");
    if (status("reactive").value_or(false)) {
        implies("locally_confluent", "confluent", "reactive and locally confluent implies confluent");
        implies("diamond", "locally_confluent", "tau/N diamonds imply local confluence");
        implies("locally_confluent", "diamond", "local confluence implies the tau/N diamonds");
    }
    return r;
}

}  // namespace sigpi
