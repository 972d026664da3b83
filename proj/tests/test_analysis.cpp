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


#include <doctest.h>

#include "gen.hpp"
#include "sigpi/analysis.hpp"
#include "sigpi/corpus.hpp"
#include "sigpi/export.hpp"
#include "sigpi/parser.hpp"

using namespace sigpi;

namespace {

Status status_of(const AnalysisReport& r, const char* property) {
    const auto* v = r.find(property);
    REQUIRE(v);
    return v->status;
}

AnalysisReport analyze_file(const char* file, Module& m) {
    m = load_file(default_corpus_dir() / file);
    Analyzer an(m.main, m, alphabet_of(m), Bounds{});
    return an.all();
}

AnalysisReport analyze_src(const std::string& src, Module& m) {
    Analyzer an(parse_process(src, m), m, alphabet_of(m), Bounds{});
    return an.all();
}

}  // namespace

TEST_CASE("a locally confluent program that loops through tau is neither reactive nor confluent") {
    Module m;
    auto r = analyze_file("tau_loop.spi", m);
    CHECK(r.contradictions.empty());
    CHECK(r.complete);
    CHECK(status_of(r, "reactive") == Status::Fails);
    CHECK(status_of(r, "locally_confluent") == Status::Holds);
    CHECK(status_of(r, "confluent") == Status::Fails);
    CHECK(status_of(r, "determinate") == Status::Fails);
    const auto* reactive = r.find("reactive");
    CHECK_FALSE(reactive->states.empty());
    CHECK_FALSE(r.find("confluent")->states.empty());
}

TEST_CASE("the server and client system is reactive, determinate and confluent") {
    Module m;
    auto r = analyze_file("server_client.spi", m);
    CHECK(r.contradictions.empty());
    for (const auto& name : property_names()) {
        CAPTURE(name);
        CHECK(status_of(r, name.c_str()) == Status::Holds);
    }
}

TEST_CASE("a divergent program fails reactivity with a cycle witness") {
    Module m;
    auto r = analyze_file("omega.spi", m);
    const auto* v = r.find("reactive");
    REQUIRE(v);
    CHECK(v->status == Status::Fails);
    CHECK_FALSE(v->states.empty());
    CHECK(r.contradictions.empty());
}

TEST_CASE("choices between emissions break determinacy") {
    Module m = parse_module("signal a, b : 1;\nmain = 0;");
    auto r = analyze_src("emit a + emit b", m);
    CHECK(r.contradictions.empty());
    CHECK(status_of(r, "determinate") == Status::Fails);
    CHECK(status_of(r, "confluent") == Status::Fails);
    CHECK(status_of(r, "strong_confluence") == Status::Fails);

    auto par = analyze_src("emit a || emit b", m);
    CHECK(par.contradictions.empty());
    CHECK(status_of(par, "determinate") == Status::Holds);
    CHECK(status_of(par, "confluent") == Status::Holds);
    CHECK(status_of(par, "strong_confluence") == Status::Holds);
}

TEST_CASE("a sequence length bound makes a late failure inconclusive") {
    Module m = parse_module("signal a, b : 1;\nmain = 0;");
    ProcPtr p = parse_process("pause.pause.(emit a + emit b)", m);
    Analyzer an(p, m, alphabet_of(m), Bounds{});
    CHECK(an.determinate(1).status == Status::Inconclusive);
    CHECK(an.determinate(0).status == Status::Fails);
    Analyzer shallow(parse_process("emit a + emit b", m), m, alphabet_of(m), Bounds{});
    CHECK(shallow.determinate(1).status == Status::Fails);
}

TEST_CASE("an incomplete exploration gives no definite positive verdict") {
    Module m = load_file(default_corpus_dir() / "server_client.spi");
    Bounds b;
    b.max_states = 5;
    Analyzer an(m.main, m, alphabet_of(m), b);
    auto r = an.all();
    CHECK_FALSE(r.complete);
    for (const auto& v : r.verdicts) {
        CAPTURE(v.property);
        CHECK(v.status != Status::Holds);
    }
}

TEST_CASE("the report encodes every requested property") {
    Module m = load_file(default_corpus_dir() / "tau_loop.spi");
    Analyzer an(m.main, m, alphabet_of(m), Bounds{});
    auto r = an.all({"reactive", "confluent"});
    REQUIRE(r.verdicts.size() == 2);
    json j = report_json(r, an.lts());
    CHECK(j["properties"].size() == 2);
    CHECK(j["properties"]["reactive"]["status"] == "fails");
    CHECK(j["properties"]["confluent"]["status"] == "fails");
    CHECK(j["properties"]["confluent"]["states"][0].contains("term"));
    CHECK(j["contradictions"].empty());
    CHECK_THROWS(an.check("no_such_property"));
}

TEST_CASE("properties on generated reactive programs respect their implications") {
    Module m = parse_module(testing::kGenDecls);
    testing::ProgramGen g(7);
    int reactive = 0;
    int nondeterminate = 0;
    for (int n = 0; n < 400 && reactive < 150; ++n) {
        auto p = testing::generate(g, m, 30);
        if (!p) continue;
        Analyzer an(p->proc, m, p->alphabet, Bounds{});
        auto r = an.all();
        CAPTURE(p->source);
        CHECK(r.contradictions.empty());
        if (status_of(r, "reactive") != Status::Holds) continue;
        ++reactive;
        Status det = status_of(r, "determinate");
        CHECK(status_of(r, "confluent") == det);
        CHECK(status_of(r, "locally_confluent") == det);
        CHECK(status_of(r, "diamond") == det);
        if (status_of(r, "strong_confluence") == Status::Holds) CHECK(det == Status::Holds);
        nondeterminate += det == Status::Fails;
    }
    CHECK(reactive >= 100);
    CHECK(nondeterminate > 0);
}
