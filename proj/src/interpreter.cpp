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

#include "sigpi/interpreter.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "sigpi/canonical.hpp"

namespace sigpi {

std::optional<Scheduler> parse_scheduler(const std::string& s) {
    if (s == "canonical") return Scheduler::Canonical;
    if (s == "random") return Scheduler::Random;
    return std::nullopt;
}

std::optional<CollectPolicy> parse_collect_policy(const std::string& s) {
    if (s == "sorted") return CollectPolicy::Sorted;
    if (s == "random") return CollectPolicy::Random;
    if (s == "enumerate") return CollectPolicy::Enumerate;
    return std::nullopt;
}

namespace {

const char* scheduler_name(Scheduler s) { return s == Scheduler::Canonical ? "canonical" : "random"; }

const char* collect_name(CollectPolicy c) {
    switch (c) {
    case CollectPolicy::Sorted: return "sorted";
    case CollectPolicy::Random: return "random";
    case CollectPolicy::Enumerate: return "enumerate";
    }
    return "?";
}

bool canonical_before(const Step& a, const Step& b) {
    if (a.rule != b.rule) return a.rule < b.rule;
    if (a.component != b.component) return a.component < b.component;
    return a.target.key < b.target.key;
}

}  // namespace

RunTrace run(const ProcPtr& p, const Module& defs, const RunConfig& config) {
    RunTrace trace;
    trace.config = config;
    std::mt19937_64 rng(config.seed);
    CanonicalState state = canonicalize(p, defs);

    for (std::size_t n = 1; n <= config.instants; ++n) {
        TraceInstant inst;
        inst.number = n;
        inst.start = state.key;
        std::set<std::string> visited{state.key};
        while (true) {
            std::vector<Step> taus;
            for (auto& s : nested_steps(state, defs))
                if (s.action.kind == Action::Kind::Tau) taus.push_back(std::move(s));
            if (taus.empty()) break;
            if (inst.steps.size() == config.fuel) {
                trace.error = "instant " + std::to_string(n) + " did not suspend within " +
                              std::to_string(config.fuel) + " tau steps; last rule " + inst.steps.back().rule +
                              " in component " + std::to_string(inst.steps.back().component);
                trace.instants.push_back(std::move(inst));
                return trace;
            }
            std::size_t pick = 0;
            if (config.scheduler == Scheduler::Canonical) {
                pick = std::min_element(taus.begin(), taus.end(), canonical_before) - taus.begin();
            } else {
                std::sort(taus.begin(), taus.end(), canonical_before);
                pick = std::uniform_int_distribution<std::size_t>(0, taus.size() - 1)(rng);
            }
            Step& s = taus[pick];
            inst.steps.push_back(TraceStep{s.rule, s.component, s.action, s.target.key});
            state = std::move(s.target);
            // The canonical scheduler is a function of the state, so a
            // revisit means it loops forever.
            if (config.scheduler == Scheduler::Canonical && !visited.insert(state.key).second) {
                trace.error = "instant " + std::to_string(n) + " does not suspend: tau cycle through " + state.key;
                trace.instants.push_back(std::move(inst));
                return trace;
            }
        }
        inst.suspended = state.key;
        inst.emitted = emission_map(state);
        inst.collect = inst.emitted;
        if (config.collect == CollectPolicy::Random)
            for (auto& [s, vals] : inst.collect) std::shuffle(vals.begin(), vals.end(), rng);
        if (config.collect == CollectPolicy::Enumerate) {
            Bounds b;
            auto all = next_steps(state, defs, b);
            for (const auto& st : all.steps) inst.alternatives.push_back(st.target.key);
        }
        auto next = next_with(state, inst.collect, defs);
        if (!next) {
            trace.error = "instant " + std::to_string(n) + ": no end-of-instant successor for " + state.key;
            trace.instants.push_back(std::move(inst));
            return trace;
        }
        state = std::move(*next);
        inst.next = state.key;
        trace.instants.push_back(std::move(inst));
    }
    return trace;
}

namespace {

json map_json(const std::map<std::string, std::vector<TermPtr>>& m) {
    json j = json::object();
    for (const auto& [s, vals] : m) {
        json l = json::array();
        for (const auto& v : vals) l.push_back(to_string(v));
        j[s] = std::move(l);
    }
    return j;
}

}  // namespace

json to_json(const RunTrace& t) {
    json j;
    j["version"] = kSchemaVersion;
    j["config"] = {{"instants", t.config.instants},
                   {"scheduler", scheduler_name(t.config.scheduler)},
                   {"collect", collect_name(t.config.collect)},
                   {"seed", t.config.seed},
                   {"fuel", t.config.fuel}};
    json insts = json::array();
    for (const auto& i : t.instants) {
        json ij;
        ij["instant"] = i.number;
        ij["start"] = i.start;
        json steps = json::array();
        for (const auto& s : i.steps)
            steps.push_back({{"rule", s.rule}, {"component", s.component}, {"action", to_json(s.action)},
                             {"state", s.state}});
        ij["steps"] = std::move(steps);
        ij["suspended"] = i.suspended;
        ij["emitted"] = map_json(i.emitted);
        ij["collect"] = map_json(i.collect);
        ij["next"] = i.next;
        if (t.config.collect == CollectPolicy::Enumerate) ij["alternatives"] = i.alternatives;
        insts.push_back(std::move(ij));
    }
    j["instants"] = std::move(insts);
    if (!t.ok()) j["error"] = t.error;
    return j;
}

}  // namespace sigpi
