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

#include "sigpi/export.hpp"

#include <algorithm>
#include <map>

namespace sigpi {

json to_json(const Action& a) {
    json j;
    j["kind"] = kind_name(a.kind);
    if (a.kind == Action::Kind::Tau || a.kind == Action::Kind::Next) return j;
    j["extruded"] = a.extruded;
    j["signal"] = a.signal;
    j["value"] = a.value ? to_string(a.value) : "";
    return j;
}

json to_json(const Alphabet& a) {
    json out = json::array();
    for (const auto& [s, v] : a) out.push_back({{"signal", s}, {"value", to_string(v)}});
    return out;
}

json to_json(const Bounds& b) {
    return {{"max_states", b.max_states},
            {"max_depth", b.max_depth},
            {"max_instants", b.max_instants},
            {"max_permutations", b.max_permutations}};
}

json lts_json(const Lts& l, const Alphabet& a, const Bounds& b) {
    json j;
    j["version"] = kSchemaVersion;
    j["alphabet"] = to_json(a);
    j["bounds"] = to_json(b);
    j["complete"] = l.complete;
    j["bound_hits"] = l.bound_hits;
    j["roots"] = l.roots;
    json states = json::array();
    for (std::size_t i = 0; i < l.size(); ++i) states.push_back({{"id", i}, {"term", l.states[i].key}});
    j["states"] = std::move(states);
    json edges = json::array();
    for (const auto& e : l.edges) edges.push_back({{"src", e.src}, {"action", to_json(e.action)}, {"dst", e.dst}});
    j["edges"] = std::move(edges);
    return j;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out;
}

}  // namespace

std::string lts_dot(const Lts& l) {
    std::string out = "digraph lts {\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < l.size(); ++i) {
        bool root = std::find(l.roots.begin(), l.roots.end(), static_cast<int>(i)) != l.roots.end();
        out += "  s" + std::to_string(i) + " [label=\"" + std::to_string(i) + ": " + dot_escape(l.states[i].key) + "\"";
        if (root) out += ", peripheries=2";
        out += "];\n";
    }
    for (const auto& e : l.edges) {
        out += "  s" + std::to_string(e.src) + " -> s" + std::to_string(e.dst) + " [label=\"" +
               dot_escape(e.action.label()) + "\"";
        if (e.action.kind == Action::Kind::Tau) out += ", style=dashed";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

namespace {

struct WitnessWriter {
    const Lts& lts;
    std::map<const Witness*, int> ids;

    json term(int s) const { return s >= 0 && s < static_cast<int>(lts.size()) ? json(lts.states[s].key) : json(); }

    json write(const std::shared_ptr<Witness>& w) {
        if (!w) return nullptr;
        if (auto it = ids.find(w.get()); it != ids.end()) return {{"ref", it->second}};
        int id = static_cast<int>(ids.size());
        ids.emplace(w.get(), id);
        json j;
        j["id"] = id;
        j["left"] = w->left;
        j["right"] = w->right;
        j["left_term"] = term(w->left);
        j["right_term"] = term(w->right);
        j["challenger"] = w->challenger_left ? "left" : "right";
        j["clause"] = w->clause;
        j["action"] = to_json(w->action);
        j["target"] = w->target;
        if (!w->context.empty()) j["context"] = w->context;
        json answers = json::array();
        for (const auto& a : w->answers)
            answers.push_back({{"state", a.state}, {"via", a.via}, {"why", write(a.why)}});
        j["answers"] = std::move(answers);
        return j;
    }
};

}  // namespace

json verdict_json(const BisimResult& r) {
    json j;
    j["version"] = kSchemaVersion;
    j["verdict"] = verdict_name(r.verdict);
    j["variant"] = variant_name(r.options.variant);
    j["relaxed_next"] = r.options.relaxed_next;
    j["alphabet"] = to_json(r.alphabet);
    j["bounds"] = to_json(r.bounds);
    j["states"] = r.lts.size();
    j["complete"] = r.lts.complete;
    if (!r.note.empty()) j["note"] = r.note;
    if (r.witness) {
        WitnessWriter w{r.lts, {}};
        j["witness"] = w.write(r.witness);
    }
    return j;
}

json report_json(const AnalysisReport& r, const Lts& l) {
    json j;
    j["version"] = kSchemaVersion;
    j["alphabet"] = to_json(r.alphabet);
    j["bounds"] = to_json(r.bounds);
    j["states"] = r.states;
    j["complete"] = r.complete;
    json props = json::object();
    for (const auto& v : r.verdicts) {
        json p;
        p["status"] = status_name(v.status);
        if (!v.detail.empty()) p["detail"] = v.detail;
        if (!v.states.empty()) {
            json states = json::array();
            for (int s : v.states) states.push_back({{"id", s}, {"term", l.states[s].key}});
            p["states"] = std::move(states);
        }
        if (!v.actions.empty()) p["actions"] = v.actions;
        p["seconds"] = v.seconds;
        props[v.property] = std::move(p);
    }
    j["properties"] = std::move(props);
    j["contradictions"] = r.contradictions;
    return j;
}

}  // namespace sigpi
