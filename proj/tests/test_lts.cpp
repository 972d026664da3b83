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

#include <set>

#include "props.hpp"
#include "sigpi/corpus.hpp"
#include "sigpi/export.hpp"
#include "sigpi/parser.hpp"

using namespace sigpi;

namespace {

Lts corpus_lts(const char* file, Module& m) {
    m = load_file(default_corpus_dir() / file);
    return explore(m.main, m, alphabet_of(m), Bounds{});
}

const char* kLtsFiles[] = {"server_client.spi", "persistence.spi", "delayed_choice.spi", "order_choice.spi",
                           "tau_loop.spi",      "omega.spi",       "tau_choice.spi", "nil.spi"};

}  // namespace

TEST_CASE("0 with an empty alphabet has one state and an N self-loop") {
    Module m = parse_module("main = 0;");
    auto l = explore(m.main, m, {}, Bounds{});
    REQUIRE(l.size() == 1);
    REQUIRE(l.edges.size() == 1);
    CHECK(l.edges[0].action.kind == Action::Kind::Next);
    CHECK(l.edges[0].src == 0);
    CHECK(l.edges[0].dst == 0);
    CHECK(l.complete);
}

TEST_CASE("persistent emissions give both collect orders at the end of the instant") {
    Module m;
    auto l = corpus_lts("persistence.spi", m);
    WeakLts w(l);
    std::set<std::string> next;
    for (int s : w.tau[l.roots[0]])
        for (int e : l.out[s])
            if (l.edges[e].action.kind == Action::Kind::Next) next.insert(l.states[l.edges[e].dst].key);
    CHECK(next == std::set<std::string>{"B([v1; v2])", "B([v2; v1])"});
}

TEST_CASE("an input lands on the state with the emission added") {
    for (const char* f : kLtsFiles) {
        CAPTURE(std::string(f));
        Module m;
        auto l = corpus_lts(f, m);
        for (const auto& e : l.edges)
            if (e.action.kind == Action::Kind::In)
                CHECK(l.states[e.dst].key == inject(l.states[e.src], e.action.signal, e.action.value, m).key);
    }
}

TEST_CASE("N leaves only suspended states and weak N has no trailing tau") {
    for (const char* f : kLtsFiles) {
        CAPTURE(std::string(f));
        Module m;
        auto l = corpus_lts(f, m);
        WeakLts w(l);
        for (const auto& e : l.edges)
            if (e.action.kind == Action::Kind::Next) CHECK(suspended(l.states[e.src], m));
        for (std::size_t s = 0; s < l.size(); ++s)
            for (int t : w.weak(static_cast<int>(s), Action::next().key())) {
                bool direct = false;
                for (int u : w.tau[s])
                    for (int e : l.out[u])
                        direct |= l.edges[e].action.kind == Action::Kind::Next && l.edges[e].dst == t;
                CHECK(direct);
            }
    }
}

TEST_CASE("outputs extrude distinct names occurring in the value") {
    Module m;
    auto l = corpus_lts("server_client.spi", m);
    bool extruding = false;
    for (const auto& e : l.edges) {
        CHECK(e.action.kind != Action::Kind::AuxIn);
        CHECK(e.action.kind != Action::Kind::Pin);
        if (e.action.kind != Action::Kind::Out) continue;
        const auto& x = e.action.extruded;
        std::set<std::string> distinct(x.begin(), x.end());
        CHECK(distinct.size() == x.size());
        auto names = names_of(*e.action.value);
        for (const auto& t : x) {
            extruding = true;
            CHECK(names.count(t) == 1);
            CHECK(t != e.action.signal);
        }
    }
    CHECK(extruding);
}

TEST_CASE("the looping choice shows a tau cycle") {
    Module m;
    auto l = corpus_lts("tau_loop.spi", m);
    std::string dot = lts_dot(l);
    CHECK(dot.find("style=dashed") != std::string::npos);
    CHECK(dot.find("label=\"τ\"") != std::string::npos);
    // Some tau edge returns to the root.
    bool back = false;
    for (const auto& e : l.edges) back |= e.action.kind == Action::Kind::Tau && e.dst == l.roots[0] && e.src != e.dst;
    CHECK(back);
}

TEST_CASE("hitting a bound marks the LTS incomplete") {
    Module m = load_file(default_corpus_dir() / "server_client.spi");
    Bounds b;
    b.max_states = 5;
    auto l = explore(m.main, m, alphabet_of(m), b);
    CHECK_FALSE(l.complete);
    CHECK_FALSE(l.bound_hits.empty());
    CHECK(l.size() <= 5);
}

TEST_CASE("exploration is deterministic") {
    Module m = load_file(default_corpus_dir() / "server_client.spi");
    auto a = lts_json(explore(m.main, m, alphabet_of(m), Bounds{}), alphabet_of(m), Bounds{}).dump();
    auto b = lts_json(explore(m.main, m, alphabet_of(m), Bounds{}), alphabet_of(m), Bounds{}).dump();
    CHECK(a == b);
}

TEST_CASE("exported actions use the documented encoding") {
    Module m;
    auto l = corpus_lts("server_client.spi", m);
    auto j = lts_json(l, alphabet_of(m), Bounds{});
    std::set<std::string> kinds;
    for (const auto& e : j["edges"]) kinds.insert(e["action"]["kind"].get<std::string>());
    CHECK(kinds == std::set<std::string>{"in", "next", "out", "tau"});
    CHECK(j["states"][0].contains("term"));
    CHECK(j["edges"][0].contains("src"));
}

TEST_CASE("input and output steps commute on the corpus LTSs") {
    std::size_t checked = 0;
    for (const char* f : kLtsFiles) {
        CAPTURE(std::string(f));
        Module m;
        auto l = corpus_lts(f, m);
        auto r = testing::commutation_squares(l, m, alphabet_of(m));
        checked += r.checked;
        CHECK(r.open.empty());
        if (!r.open.empty()) MESSAGE(r.open.front());
    }
    CHECK(checked > 100);
}

TEST_CASE("residuals follow the compatibility table") {
    auto out = Action::out({"@0"}, "s", make_var("@0"));
    auto out2 = Action::out({"@0"}, "r", make_var("@0"));
    auto in = Action::in("s", make_unit());
    CHECK(compatible(Action::next(), Action::next()));
    CHECK_FALSE(compatible(Action::next(), Action::tau()));
    CHECK(residual(in, in).kind == Action::Kind::Tau);
    CHECK(residual(in, Action::tau()) == in);
    CHECK(residual(out, out2).extruded.empty());
    CHECK_THROWS_AS(residual(Action::next(), in), std::invalid_argument);
}
