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

#include <string>

#include <json.hpp>

#include "sigpi/analysis.hpp"
#include "sigpi/equiv.hpp"

namespace sigpi {

using json = nlohmann::ordered_json;

/// Written as `"version"` in every top-level JSON document.
inline constexpr int kSchemaVersion = 1;

/// `{"kind", "extruded", "signal", "value"}`; the last three only for
/// labelled actions.
json to_json(const Action& a);
json to_json(const Alphabet& a);
json to_json(const Bounds& b);

/// States as `{id, term}`, edges as `{src, action, dst}`, plus the closure
/// assumptions (alphabet, bounds) and completeness.
json lts_json(const Lts& l, const Alphabet& a, const Bounds& b);

/// Graphviz rendering with labels in the calculus notation. Roots are
/// drawn with a double border.
std::string lts_dot(const Lts& l);

/// `{verdict, variant, relaxed_next, alphabet, bounds, witness?}`. Shared
/// witness nodes are written once and referred to by `{"ref": id}`
/// afterwards.
json verdict_json(const BisimResult& r);

json report_json(const AnalysisReport& r, const Lts& l);

}  // namespace sigpi
