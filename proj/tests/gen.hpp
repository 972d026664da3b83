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
#include <random>
#include <string>

#include "sigpi/explore.hpp"
#include "sigpi/parser.hpp"
#include "sigpi/typecheck.hpp"

namespace sigpi::testing {

/// Declarations every generated program is parsed against. The alphabet
/// has two pairs.
inline constexpr const char* kGenDecls = R"(
type bit = b0 | b1;
signal a, b : 1;
signal c : bit;
Idle() = pause.Idle();
Fwd(x) = present x(v) { emit b } else 0;
Pick(l) = match l with [b0] -> emit a | _ -> emit b;
Spin() = tau.Spin() + tau.0;
input a : *;
input c : b0;
)";

/// Random source text over the declarations above.
class ProgramGen {
  public:
    explicit ProgramGen(std::uint64_t seed) : rng_(seed) {}

    std::string proc(int depth) {
        if (depth <= 0) return leaf();
        switch (pick(11)) {
        case 0: return "tau." + atom(depth - 1);
        case 1:
        case 9: return "(" + proc(depth - 1) + " + " + proc(depth - 1) + ")";
        case 2:
        case 3: return "(" + proc(depth - 1) + " || " + proc(depth - 1) + ")";
        case 4: return "pause." + atom(depth - 1);
        case 5: {
            std::string x = fresh();
            scope_.push_back(x);
            std::string body = proc(depth - 1);
            scope_.pop_back();
            return "new " + x + " in " + atomic(body);
        }
        case 6: {
            std::string s = signal();
            return "present " + s + "(v" + std::to_string(depth) + ") { " + proc(depth - 1) + " } else " + cont();
        }
        case 7: {
            std::string v = pick(2) ? "b0" : "b1";
            return "match " + v + " with b0 -> " + atom(depth - 1) + " | _ -> " + atom(depth - 1);
        }
        case 8: return "present c(w" + std::to_string(depth) + ") { match w" + std::to_string(depth) +
                       " with b0 -> " + atom(depth - 1) + " | _ -> " + atom(depth - 1) + " } else " + cont();
        default: return leaf();
        }
    }

    std::uint64_t next() { return rng_(); }
    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  private:
    std::mt19937_64 rng_;
    std::vector<std::string> scope_;
    int counter_ = 0;

    std::string fresh() { return "x" + std::to_string(counter_++); }

    std::string atomic(const std::string& p) { return "(" + p + ")"; }
    std::string atom(int depth) { return atomic(proc(depth)); }

    std::string signal() {
        std::vector<std::string> unit{"a", "b"};
        for (const auto& s : scope_) unit.push_back(s);
        return unit[pick(unit.size())];
    }

    std::string leaf() {
        switch (pick(7)) {
        case 0: return "0";
        case 1: return "emit " + signal();
        case 2: return "emit c b0";
        case 3: return "emit c b1";
        case 4: return "Fwd(" + signal() + ")";
        case 5: return "Idle()";
        default: return pick(3) ? "emit " + signal() : "Spin()";
        }
    }

    std::string cont() {
        switch (pick(5)) {
        case 0: return "Pick(!c)";
        case 1: return "Fwd(" + signal() + ")";
        case 2: return "Idle()";
        default: return "0";
        }
    }
};

/// A generated program whose LTS is complete within `max_states`.
struct GenProgram {
    std::string source;
    ProcPtr proc;
    Alphabet alphabet;
    std::size_t states = 0;
};

/// The first pair of the declared alphabet, or both.
inline Alphabet gen_alphabet(ProgramGen& g, const Module& defs) {
    Alphabet a = alphabet_of(defs);
    if (g.pick(2)) a.resize(1);
    return a;
}

inline std::optional<GenProgram> generate(ProgramGen& g, Module& defs, std::size_t max_states) {
    int depth = 1 + static_cast<int>(g.pick(3));
    std::string src = g.proc(depth);
    Alphabet a = gen_alphabet(g, defs);
    ProcPtr p;
    try {
        p = parse_process(src, defs);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (!typecheck(defs, p).ok()) return std::nullopt;
    Bounds b;
    b.max_states = max_states;
    auto lts = explore(p, defs, a, b);
    if (!lts.complete) return std::nullopt;
    return GenProgram{src, p, a, lts.size()};
}

}  // namespace sigpi::testing
