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
#include <string>
#include <unordered_map>
#include <vector>

#include "sigpi/steps.hpp"

namespace sigpi {

struct Edge {
    int src;
    Action action;
    int dst;
};

/// Finite explored transition graph over canonical states. Edges out of a
/// state are sorted by (action key, target key) and duplicate-free.
struct Lts {
    std::vector<CanonicalState> states;
    std::unordered_map<std::string, int> index;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> out;
    std::vector<int> roots;
    std::vector<bool> expanded;
    /// False when any bound was hit; verdicts computed on the LTS are then
    /// at best inconclusive.
    bool complete = true;
    std::vector<std::string> bound_hits;

    int find(const std::string& key) const;
    std::size_t size() const { return states.size(); }
};

/// Breadth-first exploration from one or more roots sharing a state table.
Lts explore(const std::vector<CanonicalState>& roots, const Module& defs, const Alphabet& a, const Bounds& b,
            const StepFlags& flags = {});
Lts explore(const ProcPtr& root, const Module& defs, const Alphabet& a, const Bounds& b, const StepFlags& flags = {});

/// Saturated (weak) transitions of an LTS.
///
/// `tau[s]` is the reflexive-transitive tau closure. For an observable
/// label, `succ[s][key]` holds the targets of tau* . a . tau*; for N it
/// holds tau* . N only, and the trailing-tau variant is kept under the key
/// "next*".
struct WeakLts {
    std::vector<std::vector<int>> tau;
    std::vector<std::map<std::string, std::vector<int>>> succ;
    std::map<std::string, Action> actions;

    explicit WeakLts(const Lts& l);

    const std::vector<int>& weak(int s, const std::string& key) const;
};

inline constexpr const char* kRelaxedNextKey = "next*";

}  // namespace sigpi
