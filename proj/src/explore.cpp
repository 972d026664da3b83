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

#include "sigpi/explore.hpp"

#include <algorithm>
#include <deque>

namespace sigpi {

int Lts::find(const std::string& key) const {
    auto it = index.find(key);
    return it == index.end() ? -1 : it->second;
}

Lts explore(const std::vector<CanonicalState>& roots, const Module& defs, const Alphabet& a, const Bounds& b,
            const StepFlags& flags) {
    Lts l;
    std::vector<std::size_t> depth;
    std::vector<std::size_t> instants;
    std::deque<int> queue;
    auto hit = [&](const std::string& what) {
        l.complete = false;
        if (std::find(l.bound_hits.begin(), l.bound_hits.end(), what) == l.bound_hits.end())
            l.bound_hits.push_back(what);
    };
    auto add = [&](const CanonicalState& s, std::size_t d, std::size_t n) -> int {
        if (int id = l.find(s.key); id >= 0) return id;
        if (l.states.size() >= b.max_states) {
            hit("max_states");
            return -1;
        }
        int id = static_cast<int>(l.states.size());
        l.states.push_back(s);
        l.index.emplace(s.key, id);
        l.out.emplace_back();
        l.expanded.push_back(false);
        depth.push_back(d);
        instants.push_back(n);
        queue.push_back(id);
        return id;
    };
    for (const auto& r : roots) {
        int id = add(r, 0, 0);
        if (id >= 0) l.roots.push_back(id);
    }
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        if (depth[id] >= b.max_depth) {
            hit("max_depth");
            continue;
        }
        if (instants[id] >= b.max_instants) {
            hit("max_instants");
            continue;
        }
        auto steps = relevant_steps(l.states[id], defs, a, b, flags);
        if (steps.truncated) hit("max_permutations");
        l.expanded[id] = true;
        for (auto& st : steps.steps) {
            bool next = st.action.kind == Action::Kind::Next;
            int dst = add(st.target, depth[id] + 1, instants[id] + (next ? 1 : 0));
            if (dst < 0) continue;
            l.out[id].push_back(static_cast<int>(l.edges.size()));
            l.edges.push_back(Edge{id, std::move(st.action), dst});
        }
    }
    return l;
}

Lts explore(const ProcPtr& root, const Module& defs, const Alphabet& a, const Bounds& b, const StepFlags& flags) {
    return explore(std::vector<CanonicalState>{canonicalize(root, defs)}, defs, a, b, flags);
}

WeakLts::WeakLts(const Lts& l) : tau(l.size()), succ(l.size()) {
    for (std::size_t s = 0; s < l.size(); ++s) {
        std::vector<bool> seen(l.size(), false);
        std::vector<int> stack{static_cast<int>(s)};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            tau[s].push_back(u);
            for (int e : l.out[u]) {
                const Edge& edge = l.edges[e];
                if (edge.action.kind == Action::Kind::Tau && !seen[edge.dst]) {
                    seen[edge.dst] = true;
                    stack.push_back(edge.dst);
                }
            }
        }
        std::sort(tau[s].begin(), tau[s].end());
    }
    for (const auto& e : l.edges)
        if (e.action.kind != Action::Kind::Tau) actions.emplace(e.action.key(), e.action);

    for (std::size_t s = 0; s < l.size(); ++s) {
        std::map<std::string, std::set<int>> acc;
        for (int u : tau[s])
            for (int e : l.out[u]) {
                const Edge& edge = l.edges[e];
                if (edge.action.kind == Action::Kind::Tau) continue;
                auto& closed = edge.action.kind == Action::Kind::Next ? acc[kRelaxedNextKey] : acc[edge.action.key()];
                closed.insert(tau[edge.dst].begin(), tau[edge.dst].end());
                if (edge.action.kind == Action::Kind::Next) acc[edge.action.key()].insert(edge.dst);
            }
        for (auto& [k, targets] : acc) succ[s][k] = std::vector<int>(targets.begin(), targets.end());
    }
}

const std::vector<int>& WeakLts::weak(int s, const std::string& key) const {
    static const std::vector<int> none;
    if (key == "tau") return tau[s];
    auto it = succ[s].find(key);
    return it == succ[s].end() ? none : it->second;
}

}  // namespace sigpi
