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

#include <optional>
#include <string>
#include <vector>

#include "sigpi/explore.hpp"

namespace sigpi {

enum class Status { Holds, Fails, Inconclusive };

const char* status_name(Status s);

/// Outcome of one property check. A failure names the states and actions
/// exhibiting it; every verdict is relative to the alphabet and bounds of
/// the explored LTS.
struct AnalysisVerdict {
    std::string property;
    Status status = Status::Inconclusive;
    std::vector<int> states;
    std::vector<std::string> actions;
    std::string detail;
    double seconds = 0;
};

struct AnalysisReport {
    std::vector<AnalysisVerdict> verdicts;
    /// Violated implications between the properties; any entry is a bug.
    std::vector<std::string> contradictions;
    Alphabet alphabet;
    Bounds bounds;
    std::size_t states = 0;
    bool complete = true;

    const AnalysisVerdict* find(const std::string& property) const;
};

/// Property names accepted by Analyzer::check, in report order.
const std::vector<std::string>& property_names();

class Analyzer {
  public:
    Analyzer(const CanonicalState& root, const Module& defs, const Alphabet& a, const Bounds& b);
    Analyzer(const ProcPtr& root, const Module& defs, const Alphabet& a, const Bounds& b);

    const Lts& lts() const { return lts_; }
    /// Standard bisimilarity classes of the explored states.
    const std::vector<int>& classes();

    AnalysisVerdict reactivity();
    AnalysisVerdict tau_inert();
    /// Same interaction sequences lead to equivalent states; checked on
    /// sets of states reachable by a common sequence. `max_len` bounds the
    /// sequence length (0 means no bound).
    AnalysisVerdict determinate(std::size_t max_len = 0);
    AnalysisVerdict confluent();
    AnalysisVerdict locally_confluent();
    /// Only tau/tau and N/N diamonds, closed by tau steps.
    AnalysisVerdict diamond();
    /// tau/tau diamonds close in at most one step to the same state, and N
    /// successors of a state are equivalent.
    AnalysisVerdict strong_confluence();

    AnalysisVerdict check(const std::string& property);

    /// Runs the requested properties (all when empty) and cross-checks the
    /// implications known to hold between them.
    AnalysisReport all(const std::vector<std::string>& properties = {});

  private:
    const Module& defs_;
    Alphabet alphabet_;
    Bounds bounds_;
    Lts lts_;
    WeakLts weak_;
    std::optional<std::vector<int>> classes_;

    AnalysisVerdict finish(AnalysisVerdict v) const;
    AnalysisVerdict diamonds(const std::string& name, bool weak_challenges);
};

}  // namespace sigpi
