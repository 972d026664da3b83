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
#include "sigpi/corpus.hpp"
#include "sigpi/equiv.hpp"
#include "sigpi/printer.hpp"

using namespace sigpi;

namespace {

const Variant kGameVariants[] = {Variant::Standard, Variant::Weak, Variant::Reemit, Variant::Pinned, Variant::Split};

BisimResult compare(const char* left, const char* right, BisimOptions o = {}) {
    CorpusCase c{"t", "bisim", {{"left", left}, {"right", right}}};
    auto pair = load_pair(c, default_corpus_dir());
    return bisim(pair.left, pair.right, pair.defs, alphabet_of(pair.defs), Bounds{}, o);
}

BisimResult compare_src(Module& m, const std::string& p, const std::string& q, BisimOptions o = {}) {
    return bisim(parse_process(p, m), parse_process(q, m), m, alphabet_of(m), Bounds{}, o);
}

}  // namespace

TEST_CASE("the delayed choice pair is told apart by N but not by relaxed N") {
    for (auto v : kGameVariants) {
        CAPTURE(variant_name(v));
        BisimOptions o;
        o.variant = v;
        auto r = compare("delayed_choice.spi", "order_choice.spi", o);
        CHECK(r.verdict == Verdict::Distinguished);
        REQUIRE(r.witness);
        CHECK(replay(r));
    }
    BisimOptions relaxed;
    relaxed.relaxed_next = true;
    CHECK(compare("delayed_choice.spi", "order_choice.spi", relaxed).verdict == Verdict::Equivalent);
}

TEST_CASE("a divergent program differs from 0, one that can stop does not") {
    for (auto v : kGameVariants) {
        CAPTURE(variant_name(v));
        BisimOptions o;
        o.variant = v;
        auto omega = compare("omega.spi", "nil.spi", o);
        CHECK(omega.verdict == Verdict::Distinguished);
        CHECK(replay(omega));
        CHECK(compare("tau_choice.spi", "nil.spi", o).verdict == Verdict::Equivalent);
    }
    BisimOptions barbed;
    barbed.variant = Variant::Barbed;
    CHECK(compare("omega.spi", "nil.spi", barbed).verdict == Verdict::Unsupported);
}

TEST_CASE("barbed bisimulation on reactive programs") {
    Module m = parse_module("signal a, b : 1;\ninput a : *;");
    BisimOptions o;
    o.variant = Variant::Barbed;
    CHECK(compare_src(m, "tau.emit b", "emit b", o).verdict == Verdict::Equivalent);
    CHECK(compare_src(m, "emit a", "emit b", o).verdict == Verdict::Distinguished);
}

TEST_CASE("witnesses are shared and serialized with references") {
    auto r = compare("delayed_choice.spi", "order_choice.spi");
    auto j = verdict_json(r);
    CHECK(j["verdict"] == "distinguished");
    CHECK(j["variant"] == "standard");
    CHECK(j.contains("alphabet"));
    CHECK(j.contains("bounds"));
    REQUIRE(j.contains("witness"));
    CHECK(j["witness"]["action"].contains("kind"));
}

TEST_CASE("a hit bound makes the verdict inconclusive") {
    Module m = load_file(default_corpus_dir() / "server_client.spi");
    Bounds b;
    b.max_states = 5;
    auto r = bisim(m.main, m.main, m, alphabet_of(m), b);
    CHECK(r.verdict == Verdict::Inconclusive);
}

TEST_CASE("equivalence is preserved by adding an emission") {
    auto cases = load_corpus(default_corpus_dir());
    int checked = 0;
    for (const auto& c : cases) {
        if (!c.data.value("congruence", false)) continue;
        auto pair = load_pair(c, default_corpus_dir());
        auto a = alphabet_of(pair.defs);
        for (const auto& [s, v] : a) {
            CAPTURE(c.name);
            auto p = make_par({pair.left, make_emit(s, v)});
            auto q = make_par({pair.right, make_emit(s, v)});
            CHECK(bisim(p, q, pair.defs, a, Bounds{}).verdict == Verdict::Equivalent);
            ++checked;
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("game variants agree on generated pairs") {
    Module m = parse_module(testing::kGenDecls);
    testing::ProgramGen g(21);
    int pairs = 0;
    int distinguished = 0;
    while (pairs < 60) {
        auto p = testing::generate(g, m, 12);
        if (!p) continue;
        std::optional<testing::GenProgram> q;
        while (!(q = testing::generate(g, m, 12)) || q->alphabet.size() != p->alphabet.size()) {
        }
        ++pairs;
        std::optional<Verdict> first;
        for (auto v : kGameVariants) {
            BisimOptions o;
            o.variant = v;
            auto r = bisim(p->proc, q->proc, m, p->alphabet, Bounds{}, o);
            CAPTURE(p->source);
            CAPTURE(q->source);
            CAPTURE(variant_name(v));
            if (!first) first = r.verdict;
            CHECK(r.verdict == *first);
            if (r.verdict == Verdict::Distinguished) CHECK(replay(r));
        }
        distinguished += *first == Verdict::Distinguished;
    }
    CHECK(distinguished > 0);
    CHECK(distinguished < pairs);
}

TEST_CASE("contexts fill their hole and sampled contexts do not separate equivalent programs") {
    CorpusCase c{"t", "bisim", {{"module", "pairs.spi"}, {"left", "tau.emit a"}, {"right", "emit a"}}};
    auto pair = load_pair(c, default_corpus_dir());
    auto a = alphabet_of(pair.defs);
    auto contexts = enumerate_contexts({"a", "b"}, a, {}, 2);
    REQUIRE(contexts.size() > 10);
    Context ctx;
    ctx.layers.push_back({false, "", make_emit("b", make_unit())});
    ctx.layers.push_back({true, "b", nullptr});
    CHECK(to_string(ctx.fill(make_nil())).find("new b in") != std::string::npos);
    auto r = context_falsifier(pair.left, pair.right, pair.defs, a, Bounds{}, contexts);
    CHECK_FALSE(r.distinguishing);
    CHECK(r.tried == contexts.size());
}

TEST_CASE("merging two sources primes clashing threads") {
    Module a = parse_module("signal s : 1;\nA() = emit s;\nmain = A();");
    Module b = parse_module("signal s : 1;\nA() = 0;\nmain = A();");
    ProcPtr q = b.main;
    Module merged = merge_modules(a, b, q);
    CHECK(merged.find_thread("A'") != nullptr);
    CHECK(to_string(q) == "A'()");
    Module c = parse_module("signal s, t : 1;\ninput s : *;\nmain = 0;");
    Module d = parse_module("signal s, t : 1;\ninput t : *;\nmain = 0;");
    ProcPtr r = d.main;
    CHECK_THROWS_AS(merge_modules(c, d, r), std::runtime_error);
    // A side without inputs takes the other's.
    r = c.main;
    CHECK(merge_modules(a, c, r).inputs.size() == 1);
}

TEST_CASE("variant names round-trip") {
    for (auto v : {Variant::Standard, Variant::Weak, Variant::Reemit, Variant::Pinned, Variant::Split, Variant::Barbed})
        CHECK(parse_variant(variant_name(v)) == v);
    CHECK(parse_variant("v1") == Variant::Reemit);
    CHECK(parse_variant("v3") == Variant::Split);
    CHECK_FALSE(parse_variant("bogus"));
}
