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

#include "sigpi/corpus.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "sigpi/analysis.hpp"
#include "sigpi/interpreter.hpp"
#include "sigpi/parser.hpp"
#include "sigpi/typecheck.hpp"

namespace sigpi {

namespace {

std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) out += (out.empty() ? "" : "\n") + l;
    return out;
}

}  // namespace

TypeError::TypeError(const std::vector<std::string>& errors) : std::runtime_error(join_lines(errors)) {}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Module load_module(const std::string& source) {
    Module m = parse_module(source);
    auto report = typecheck(m);
    if (!report.ok()) throw TypeError(report.errors);
    return m;
}

Module load_file(const std::filesystem::path& path, const std::filesystem::path& alphabet) {
    std::string source = read_file(path);
    if (alphabet.empty()) return load_module(source);
    std::size_t own = parse_module(source).inputs.size();
    Module m = parse_module(source + "\n" + read_file(alphabet));
    m.inputs.erase(m.inputs.begin(), m.inputs.begin() + static_cast<std::ptrdiff_t>(own));
    auto report = typecheck(m);
    if (!report.ok()) throw TypeError(report.errors);
    return m;
}

std::vector<CorpusCase> load_corpus(const std::filesystem::path& dir) {
    auto file = dir / "expectations.json";
    if (!std::filesystem::exists(file)) throw std::runtime_error("no expectations.json in " + dir.string());
    json doc = json::parse(read_file(file));
    std::vector<CorpusCase> cases;
    for (const auto& c : doc.value("cases", json::array()))
        cases.push_back(CorpusCase{c.at("name").get<std::string>(), c.at("kind").get<std::string>(), c});
    if (cases.empty()) throw std::runtime_error("corpus in " + dir.string() + " lists no case");
    return cases;
}

ProcessPair load_pair(const CorpusCase& c, const std::filesystem::path& dir) {
    ProcessPair pair;
    pair.name = c.name;
    if (c.data.contains("module")) {
        pair.defs = load_file(dir / c.data.at("module").get<std::string>());
        for (auto [src, slot] : {std::pair{"left", &pair.left}, std::pair{"right", &pair.right}}) {
            *slot = parse_process(c.data.at(src).get<std::string>(), pair.defs);
            auto report = typecheck(pair.defs, *slot);
            if (!report.ok()) throw TypeError(report.errors);
        }
        return pair;
    }
    Module a = load_file(dir / c.data.at("left").get<std::string>());
    Module b = load_file(dir / c.data.at("right").get<std::string>());
    pair.left = a.main;
    pair.right = b.main;
    pair.defs = merge_modules(a, b, pair.right);
    return pair;
}

namespace {

std::string values_string(const std::vector<std::string>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i];
    return out + "]";
}

void run_check(const CorpusCase& c, const std::filesystem::path& dir, CaseOutcome& out) {
    out.expected = "ok";
    load_file(dir / c.data.at("file").get<std::string>());
    out.actual = "ok";
}

void run_run(const CorpusCase& c, const std::filesystem::path& dir, CaseOutcome& out) {
    Module m = load_file(dir / c.data.at("file").get<std::string>());
    RunConfig cfg;
    cfg.instants = c.data.at("instants").get<std::size_t>();
    auto trace = run(m.main, m, cfg);
    const auto& e = c.data.at("expect");
    auto n = e.at("instant").get<std::size_t>();
    auto signal = e.at("signal").get<std::string>();
    out.expected = "instant " + std::to_string(n) + " emits " + signal + " " +
                   values_string(e.at("values").get<std::vector<std::string>>());
    if (!trace.ok()) {
        out.actual = trace.error;
        return;
    }
    std::vector<std::string> got;
    if (n >= 1 && n <= trace.instants.size()) {
        const auto& emitted = trace.instants[n - 1].emitted;
        if (auto it = emitted.find(signal); it != emitted.end())
            for (const auto& v : it->second) got.push_back(to_string(v));
    }
    out.actual = "instant " + std::to_string(n) + " emits " + signal + " " + values_string(got);
}

void run_analyze(const CorpusCase& c, const std::filesystem::path& dir, const Bounds& b, CaseOutcome& out) {
    Module m = load_file(dir / c.data.at("file").get<std::string>());
    std::vector<std::string> props;
    for (const auto& [k, v] : c.data.at("expect").items()) {
        props.push_back(k);
        out.expected += (out.expected.empty() ? "" : ", ") + k + "=" + v.get<std::string>();
    }
    Analyzer an(m.main, m, alphabet_of(m), b);
    auto report = an.all(props);
    for (const auto& v : report.verdicts)
        out.actual += (out.actual.empty() ? "" : ", ") + v.property + "=" + status_name(v.status);
}

void run_next(const CorpusCase& c, const std::filesystem::path& dir, const Bounds& b, CaseOutcome& out) {
    Module m = load_file(dir / c.data.at("file").get<std::string>());
    std::set<std::string> want;
    for (const auto& src : c.data.at("expect")) want.insert(canonicalize(parse_process(src.get<std::string>(), m), m).key);
    auto lts = explore(m.main, m, alphabet_of(m), b);
    WeakLts weak(lts);
    std::set<std::string> got;
    for (int s : weak.tau[lts.roots.front()])
        for (int e : lts.out[s])
            if (lts.edges[e].action.kind == Action::Kind::Next) got.insert(lts.states[lts.edges[e].dst].key);
    out.expected = values_string({want.begin(), want.end()});
    out.actual = values_string({got.begin(), got.end()});
}

void run_bisim(const CorpusCase& c, const std::filesystem::path& dir, const Bounds& b, CaseOutcome& out) {
    auto pair = load_pair(c, dir);
    BisimOptions o;
    auto variant = parse_variant(c.data.value("variant", "standard"));
    if (!variant) throw std::runtime_error("unknown variant in case " + c.name);
    o.variant = *variant;
    o.relaxed_next = c.data.value("relaxed_next", false);
    out.expected = c.data.at("expect").get<std::string>();
    auto r = bisim(pair.left, pair.right, pair.defs, alphabet_of(pair.defs), b, o);
    out.actual = verdict_name(r.verdict);
}

}  // namespace

CaseOutcome run_case(const CorpusCase& c, const std::filesystem::path& dir, const Bounds& b) {
    CaseOutcome out;
    out.name = c.name;
    auto start = std::chrono::steady_clock::now();
    try {
        if (c.kind == "check") run_check(c, dir, out);
        else if (c.kind == "run") run_run(c, dir, out);
        else if (c.kind == "analyze") run_analyze(c, dir, b, out);
        else if (c.kind == "next") run_next(c, dir, b, out);
        else if (c.kind == "bisim") run_bisim(c, dir, b, out);
        else throw std::runtime_error("unknown case kind " + c.kind);
        out.passed = out.expected == out.actual;
    } catch (const std::exception& e) {
        out.actual = std::string("error: ") + e.what();
        out.passed = false;
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::filesystem::path default_corpus_dir() {
    if (const char* env = std::getenv("SIGPI_CORPUS")) return env;
    return SIGPI_CORPUS_DIR;
}

}  // namespace sigpi
