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

#include <algorithm>

#include "gen.hpp"
#include "sigpi/canonical.hpp"
#include "sigpi/corpus.hpp"
#include "sigpi/printer.hpp"

using namespace sigpi;

namespace {

/// Structurally equivalent variant of p: static parallel compositions are
/// shuffled and regrouped, 0 components added, restrictions renamed and
/// narrowed to the components that use them.
class Scrambler {
  public:
    explicit Scrambler(std::uint64_t seed) : rng_(seed) {}

    ProcPtr run(const ProcPtr& p) {
        if (const auto* par = std::get_if<Par>(&p->node)) {
            std::vector<ProcPtr> parts;
            for (const auto& q : par->parts) parts.push_back(run(q));
            if (coin()) parts.push_back(make_nil());
            std::shuffle(parts.begin(), parts.end(), rng_);
            if (parts.size() > 2 && coin()) {
                auto inner = make_par({parts[0], parts[1]});
                parts.erase(parts.begin(), parts.begin() + 2);
                parts.insert(parts.begin(), inner);
            }
            return make_par(std::move(parts));
        }
        if (const auto* n = std::get_if<New>(&p->node)) {
            std::string fresh = "r" + std::to_string(counter_++);
            auto body = substitute(n->body, Subst{{n->signal, make_var(fresh)}});
            if (const auto* par = std::get_if<Par>(&body->node)) {
                std::vector<ProcPtr> inside;
                std::vector<ProcPtr> outside;
                for (const auto& q : par->parts) (occurs_free(*q, fresh) ? inside : outside).push_back(run(q));
                outside.push_back(make_new(fresh, make_par(std::move(inside))));
                std::shuffle(outside.begin(), outside.end(), rng_);
                return make_par(std::move(outside));
            }
            return make_new(fresh, run(body));
        }
        return coin() ? make_par({p, make_nil()}) : p;
    }

  private:
    std::mt19937_64 rng_;
    int counter_ = 0;

    bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
};

std::string key(const std::string& src, Module& m) { return canonicalize(parse_process(src, m), m).key; }

std::vector<std::string> step_keys(const CanonicalState& s, const Module& m, const Alphabet& a) {
    std::vector<std::string> out;
    for (const auto& st : relevant_steps(s, m, a, Bounds{}).steps) out.push_back(st.action.key() + " " + st.target.key);
    return out;
}

}  // namespace

TEST_CASE("parallel composition is commutative and associative with unit 0") {
    Module m = parse_module("signal a, b : 1;\ntype bit = b0 | b1;\nsignal c : bit;");
    CHECK(key("emit a || emit b", m) == key("emit b || emit a", m));
    CHECK(key("(emit a || emit b) || emit c b0", m) == key("emit a || (emit b || emit c b0)", m));
    CHECK(key("emit a || 0", m) == key("emit a", m));
    CHECK(key("0 || 0", m) == key("0", m));
}

TEST_CASE("restrictions commute and extend over components not using them") {
    Module m = parse_module("signal a : 1;\ntype bit = b0 | b1;\nsignal c : bit;\nsignal k : Sig(1);");
    CHECK(key("new x in new y in (emit k x || emit k y || emit a)", m) ==
          key("new y in new x in (emit k y || emit a || emit k x)", m));
    CHECK(key("new x in (emit k x || emit a)", m) == key("(new x in emit k x) || emit a", m));
    CHECK(key("new x in emit k x", m) == key("new z in emit k z", m));
    CHECK(key("new x in emit k x", m) != key("emit k a", m));
}

TEST_CASE("restricted names only emitted on are collected") {
    Module m = parse_module("signal a : 1;\nsignal k : Sig(1);");
    CHECK(key("new x in emit x", m) == key("0", m));
    CHECK(key("new x in (emit x || emit a)", m) == key("emit a", m));
    CHECK(key("new x in emit k x", m) != key("0", m));
}

TEST_CASE("bound names inside components are normalized") {
    Module m = parse_module("signal a, b : 1;");
    CHECK(key("present a(x) { emit b } else 0", m) == key("present a(y) { emit b } else 0", m));
}

TEST_CASE("emitted values are evaluated and duplicates dropped") {
    Module m = load_file(default_corpus_dir() / "server_client.spi");
    CHECK(key("emit t f(b0)", m) == key("emit t b1", m));
    CHECK(key("emit t b1 || emit t f(b0)", m) == key("emit t b1", m));
}

TEST_CASE("canonical forms are fixed points of printing and parsing") {
    Module m = parse_module(testing::kGenDecls);
    testing::ProgramGen g(3);
    int n = 0;
    while (n < 60) {
        auto p = testing::generate(g, m, 40);
        if (!p) continue;
        ++n;
        auto c = canonicalize(p->proc, m);
        CHECK(canonicalize(to_process(c), m).key == c.key);
        CHECK(canonicalize(parse_process(c.key, m), m).key == c.key);
    }
}

TEST_CASE("structurally equivalent programs have the same canonical form and steps") {
    Module m = parse_module(testing::kGenDecls);
    testing::ProgramGen g(5);
    Scrambler scramble(9);
    std::vector<ProcPtr> programs;
    for (const char* f : {"server_client.spi", "persistence.spi", "order_choice.spi", "tau_loop.spi"}) {
        Module cm = load_file(default_corpus_dir() / f);
        auto c = canonicalize(cm.main, cm);
        for (int i = 0; i < 5; ++i) {
            auto s = canonicalize(scramble.run(cm.main), cm);
            CHECK(s.key == c.key);
            CHECK(step_keys(s, cm, alphabet_of(cm)) == step_keys(c, cm, alphabet_of(cm)));
        }
    }
    int n = 0;
    while (n < 100) {
        auto p = testing::generate(g, m, 40);
        if (!p) continue;
        ++n;
        auto c = canonicalize(p->proc, m);
        auto s = canonicalize(scramble.run(p->proc), m);
        CAPTURE(p->source);
        CHECK(s.key == c.key);
        CHECK(step_keys(s, m, p->alphabet) == step_keys(c, m, p->alphabet));
    }
}

TEST_CASE("states equal up to extruded names") {
    Module m = parse_module("signal k : Sig(1);");
    auto a = canonicalize(parse_process("emit k @0 || emit k @1 || emit @0", m), m);
    auto b = canonicalize(parse_process("emit k @1 || emit k @0 || emit @1", m), m);
    auto c = canonicalize(parse_process("emit k @0 || emit k @1", m), m);
    CHECK(equal_up_to_extrusion(a, b, m));
    CHECK_FALSE(equal_up_to_extrusion(a, c, m));
}
