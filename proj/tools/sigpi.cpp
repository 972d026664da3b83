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

// Command-line front end. Machine-readable output goes to stdout, every
// diagnostic to stderr.
//
// Exit codes:
//   0  success, equivalent, every property holds
//   1  usage, I/O, syntax or type error
//   2  distinguished, some property fails, some corpus case deviates
//   3  inconclusive (bounds hit) or unsupported
//   4  run error: an instant did not suspend
//   5  analysis found contradictory verdicts

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sigpi/analysis.hpp"
#include "sigpi/corpus.hpp"
#include "sigpi/equiv.hpp"
#include "sigpi/export.hpp"
#include "sigpi/interpreter.hpp"
#include "sigpi/lexer.hpp"
#include "sigpi/parser.hpp"
#include "sigpi/typecheck.hpp"

using namespace sigpi;

namespace {

void add_bounds(CLI::App* cmd, Bounds& b) {
    cmd->add_option("--max-states", b.max_states, "State bound")->capture_default_str();
    cmd->add_option("--max-depth", b.max_depth, "Depth bound")->capture_default_str();
    cmd->add_option("--max-instants", b.max_instants, "Instant bound")->capture_default_str();
    cmd->add_option("--max-permutations", b.max_permutations, "Bound on collect orders per N step")
        ->capture_default_str();
}

void write_out(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int cmd_check(const std::string& file) {
    Module m = parse_module(read_file(file));
    auto report = typecheck(m);
    for (const auto& e : report.errors) std::cerr << file << ": " << e << "\n";
    if (!report.ok()) return 1;
    json j;
    j["version"] = kSchemaVersion;
    j["file"] = file;
    j["types"] = report.bindings;
    j["alphabet"] = to_json(alphabet_of(m));
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_run(const std::string& file, const RunConfig& cfg, const std::string& out) {
    Module m = load_file(file);
    auto trace = run(m.main, m, cfg);
    write_out(to_json(trace).dump(2) + "\n", out);
    if (!trace.ok()) {
        std::cerr << "run: " << trace.error << "\n";
        return 4;
    }
    return 0;
}

int cmd_lts(const std::string& file, const std::string& alphabet, const Bounds& b, const std::string& format,
            const std::string& out) {
    Module m = load_file(file, alphabet);
    auto a = alphabet_of(m);
    auto lts = explore(m.main, m, a, b);
    if (!lts.complete)
        for (const auto& h : lts.bound_hits) std::cerr << "lts: bound hit: " << h << "\n";
    write_out(format == "dot" ? lts_dot(lts) : lts_json(lts, a, b).dump(2) + "\n", out);
    return lts.complete ? 0 : 3;
}

int cmd_bisim(const std::string& left, const std::string& right, const std::string& alphabet, const Bounds& b,
              const BisimOptions& o) {
    Module a = load_file(left, alphabet);
    Module bm = load_file(right, alphabet);
    ProcPtr q = bm.main;
    Module defs = merge_modules(a, bm, q);
    auto r = bisim(a.main, q, defs, alphabet_of(defs), b, o);
    std::cout << verdict_json(r).dump(2) << "\n";
    if (!r.note.empty()) std::cerr << "bisim: " << r.note << "\n";
    switch (r.verdict) {
    case Verdict::Equivalent: return 0;
    case Verdict::Distinguished: return 2;
    default: return 3;
    }
}

int cmd_analyze(const std::string& file, const std::string& alphabet, const Bounds& b,
                const std::vector<std::string>& properties) {
    Module m = load_file(file, alphabet);
    for (const auto& p : properties)
        if (std::find(property_names().begin(), property_names().end(), p) == property_names().end())
            throw CLI::ValidationError("--properties", "unknown property " + p);
    Analyzer an(m.main, m, alphabet_of(m), b);
    auto report = an.all(properties);
    std::cout << report_json(report, an.lts()).dump(2) << "\n";
    for (const auto& c : report.contradictions) std::cerr << "analyze: contradiction: " << c << "\n";
    if (!report.contradictions.empty()) return 5;
    bool fails = false;
    bool unsure = false;
    for (const auto& v : report.verdicts) {
        fails |= v.status == Status::Fails;
        unsure |= v.status == Status::Inconclusive;
    }
    return fails ? 2 : unsure ? 3 : 0;
}

int cmd_corpus(const std::string& dir, const Bounds& b) {
    auto root = dir.empty() ? default_corpus_dir() : std::filesystem::path(dir);
    auto cases = load_corpus(root);
    json out = json::array();
    int failed = 0;
    for (const auto& c : cases) {
        auto r = run_case(c, root, b);
        out.push_back({{"name", r.name},
                       {"passed", r.passed},
                       {"expected", r.expected},
                       {"actual", r.actual},
                       {"seconds", r.seconds}});
        if (!r.passed) {
            ++failed;
            std::cerr << "corpus: " << r.name << ": expected " << r.expected << ", got " << r.actual << "\n";
        }
    }
    std::cout << json{{"version", kSchemaVersion}, {"cases", out}, {"passed", cases.size() - failed}, {"failed", failed}}.dump(2) << "\n";
    return failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interpreter, LTS generator, bisimulation checker and analyzer for the synchronous pi-calculus"};
    app.require_subcommand(1);
    Bounds bounds = Bounds::from_env();

    std::string file;
    std::string file2;
    std::string alphabet;
    std::string out;

    auto* check = app.add_subcommand("check", "Parse and typecheck a program");
    check->add_option("file", file, "Source file")->required();

    RunConfig cfg;
    std::string scheduler = "canonical";
    std::string collect = "sorted";
    auto* runc = app.add_subcommand("run", "Execute instants of a program");
    runc->add_option("file", file, "Source file")->required();
    runc->add_option("--instants,-k", cfg.instants, "Number of instants")->capture_default_str();
    runc->add_option("--policy", scheduler, "Tau scheduler: canonical or random")->capture_default_str();
    runc->add_option("--collect", collect, "Order of collected values: sorted, random or enumerate")
        ->capture_default_str();
    runc->add_option("--seed", cfg.seed, "Seed for the random policies")->capture_default_str();
    runc->add_option("--fuel", cfg.fuel, "Tau steps allowed per instant")->capture_default_str();
    runc->add_option("-o,--output", out, "Output file (default stdout)");

    std::string format = "json";
    auto* lts = app.add_subcommand("lts", "Explore and export the transition system");
    lts->add_option("file", file, "Source file")->required();
    lts->add_option("--alphabet", alphabet, "File of input declarations replacing those of the source");
    lts->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
    lts->add_option("-o,--output", out, "Output file (default stdout)");
    add_bounds(lts, bounds);

    BisimOptions bopts;
    std::string variant = "standard";
    auto* bis = app.add_subcommand("bisim", "Compare the main programs of two files");
    bis->add_option("left", file, "First source file")->required();
    bis->add_option("right", file2, "Second source file")->required();
    bis->add_option("--alphabet", alphabet, "File of input declarations replacing those of the sources");
    bis->add_option("--variant", variant, "standard, weak, reemit (v1), pinned (v2), split (v3) or barbed")
        ->capture_default_str();
    bis->add_flag("--relaxed-N", bopts.relaxed_next, "Answer N by tau* N tau*");
    bis->add_option("--context-size", bopts.context_size, "Largest emission context of the split variant")
        ->capture_default_str();
    add_bounds(bis, bounds);

    std::vector<std::string> properties;
    auto* ana = app.add_subcommand("analyze", "Check reactivity, determinacy and confluence properties");
    ana->add_option("file", file, "Source file")->required();
    ana->add_option("--alphabet", alphabet, "File of input declarations replacing those of the source");
    ana->add_option("--properties", properties, "Subset of properties to check")->delimiter(',');
    add_bounds(ana, bounds);

    std::string corpus_dir;
    auto* cor = app.add_subcommand("corpus", "Run the bundled examples against their expected outcomes");
    cor->add_option("dir", corpus_dir, "Corpus directory (default: the bundled one)");
    add_bounds(cor, bounds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cerr << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        std::cerr << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "sigpi: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*check) return cmd_check(file);
        if (*runc) {
            auto s = parse_scheduler(scheduler);
            auto c = parse_collect_policy(collect);
            if (!s) throw CLI::ValidationError("--policy", "unknown policy " + scheduler);
            if (!c) throw CLI::ValidationError("--collect", "unknown collect policy " + collect);
            cfg.scheduler = *s;
            cfg.collect = *c;
            return cmd_run(file, cfg, out);
        }
        if (*lts) return cmd_lts(file, alphabet, bounds, format, out);
        if (*bis) {
            auto v = parse_variant(variant);
            if (!v) throw CLI::ValidationError("--variant", "unknown variant " + variant);
            bopts.variant = *v;
            return cmd_bisim(file, file2, alphabet, bounds, bopts);
        }
        if (*ana) return cmd_analyze(file, alphabet, bounds, properties);
        if (*cor) return cmd_corpus(corpus_dir, bounds);
    } catch (const SyntaxError& e) {
        for (const auto& d : e.diagnostics()) std::cerr << file << ":" << d.str() << "\n";
        return 1;
    } catch (const TypeError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "sigpi: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
