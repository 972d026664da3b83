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

#include "sigpi/corpus.hpp"
#include "sigpi/interpreter.hpp"
#include "sigpi/parser.hpp"

using namespace sigpi;

namespace {

RunTrace run_file(const char* file, RunConfig cfg) {
    Module m = load_file(default_corpus_dir() / file);
    return run(m.main, m, cfg);
}

}  // namespace

TEST_CASE("0 runs through any number of instants unchanged") {
    RunConfig cfg;
    cfg.instants = 5;
    auto t = run_file("nil.spi", cfg);
    REQUIRE(t.ok());
    REQUIRE(t.instants.size() == 5);
    for (const auto& i : t.instants) {
        CHECK(i.steps.empty());
        CHECK(i.emitted.empty());
        CHECK(i.next == "0");
    }
}

TEST_CASE("the sorted policy hands persistent values over in value order") {
    RunConfig cfg;
    cfg.instants = 2;
    auto t = run_file("persistence.spi", cfg);
    REQUIRE(t.ok());
    CHECK(t.instants[0].next == "B([v1; v2])");
    CHECK(t.instants[0].alternatives.empty());
    CHECK(t.instants[1].start == "B([v1; v2])");
    CHECK(t.instants[1].next == "B([v1; v2])");
}

TEST_CASE("the enumerate policy lists every ordering") {
    RunConfig cfg;
    cfg.collect = CollectPolicy::Enumerate;
    auto t = run_file("persistence.spi", cfg);
    REQUIRE(t.ok());
    CHECK(t.instants[0].alternatives == std::vector<std::string>{"B([v1; v2])", "B([v2; v1])"});
    CHECK(t.instants[0].next == "B([v1; v2])");
}

TEST_CASE("random choices are reproducible from the seed") {
    RunConfig cfg;
    cfg.instants = 4;
    cfg.scheduler = Scheduler::Random;
    cfg.collect = CollectPolicy::Random;
    std::set<std::string> outcomes;
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
        cfg.seed = seed;
        auto a = to_json(run_file("persistence.spi", cfg)).dump();
        auto b = to_json(run_file("persistence.spi", cfg)).dump();
        CHECK(a == b);
        outcomes.insert(run_file("persistence.spi", cfg).instants[0].next);
    }
    CHECK(outcomes == std::set<std::string>{"B([v1; v2])", "B([v2; v1])"});
}

TEST_CASE("a divergent instant stops the run with an error") {
    RunConfig cfg;
    cfg.instants = 3;
    auto t = run_file("omega.spi", cfg);
    CHECK_FALSE(t.ok());
    CHECK(t.instants.size() <= 1);
    CHECK(to_json(t).contains("error"));

    cfg.scheduler = Scheduler::Random;
    cfg.fuel = 50;
    auto r = run_file("omega.spi", cfg);
    CHECK_FALSE(r.ok());
}

TEST_CASE("the client sees the server's answer in the second instant") {
    RunConfig cfg;
    cfg.instants = 3;
    auto t = run_file("server_client.spi", cfg);
    REQUIRE(t.ok());
    REQUIRE(t.instants.size() == 3);
    const auto& second = t.instants[1].emitted;
    REQUIRE(second.count("t"));
    CHECK(second.at("t").size() == 1);
    CHECK(to_string(second.at("t")[0]) == "b1");
}

TEST_CASE("canonical runs are byte-identical") {
    RunConfig cfg;
    cfg.instants = 3;
    auto a = to_json(run_file("server_client.spi", cfg)).dump(2);
    auto b = to_json(run_file("server_client.spi", cfg)).dump(2);
    CHECK(a == b);
}

TEST_CASE("scheduler and policy names parse") {
    CHECK(parse_scheduler("canonical") == Scheduler::Canonical);
    CHECK(parse_scheduler("random") == Scheduler::Random);
    CHECK_FALSE(parse_scheduler("fifo"));
    CHECK(parse_collect_policy("sorted") == CollectPolicy::Sorted);
    CHECK(parse_collect_policy("enumerate") == CollectPolicy::Enumerate);
    CHECK_FALSE(parse_collect_policy("reverse"));
}
