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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigpi/export.hpp"

namespace sigpi {

/// Which tau step fires next. Canonical picks the least (rule, component),
/// ties broken by the target's printed form.
enum class Scheduler { Canonical, Random };

/// How the lists handed to `!s` at the end of an instant are ordered.
/// Sorted uses the printed value order; Enumerate also records every
/// alternative successor but continues with the sorted one.
enum class CollectPolicy { Sorted, Random, Enumerate };

std::optional<Scheduler> parse_scheduler(const std::string& s);
std::optional<CollectPolicy> parse_collect_policy(const std::string& s);

struct RunConfig {
    std::size_t instants = 1;
    Scheduler scheduler = Scheduler::Canonical;
    CollectPolicy collect = CollectPolicy::Sorted;
    std::uint64_t seed = 0;
    /// Tau steps allowed per instant.
    std::size_t fuel = 10000;
};

struct TraceStep {
    std::string rule;
    int component = -1;
    Action action;
    std::string state;
};

struct TraceInstant {
    std::size_t number = 0;
    std::string start;
    std::vector<TraceStep> steps;
    /// State reached when no tau step is left.
    std::string suspended;
    /// Values emitted during the instant, per signal.
    EmissionMap emitted;
    CollectMap collect;
    std::string next;
    /// Every N successor, filled by CollectPolicy::Enumerate.
    std::vector<std::string> alternatives;
};

struct RunTrace {
    RunConfig config;
    std::vector<TraceInstant> instants;
    /// Set when an instant did not suspend; the trace stops there.
    std::string error;

    bool ok() const { return error.empty(); }
};

RunTrace run(const ProcPtr& p, const Module& defs, const RunConfig& config);

json to_json(const RunTrace& t);

}  // namespace sigpi
