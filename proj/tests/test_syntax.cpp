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

#include <fstream>

#include "sigpi/corpus.hpp"
#include "sigpi/eval.hpp"
#include "sigpi/lexer.hpp"
#include "sigpi/parser.hpp"
#include "sigpi/printer.hpp"
#include "sigpi/typecheck.hpp"

using namespace sigpi;

namespace {

std::string first_error(const std::string& src) {
    try {
        parse_module(src);
    } catch (const SyntaxError& e) {
        return e.diagnostics().front().str();
    }
    return "";
}

std::vector<std::string> type_errors(const std::string& src) { return typecheck(parse_module(src)).errors; }

bool mentions(const std::vector<std::string>& errors, const std::string& needle) {
    for (const auto& e : errors)
        if (e.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("tokens carry line and column") {
    auto toks = tokenize("emit s\n  // comment\n  x :: l /* block */ ->");
    REQUIRE(toks.size() == 7);
    CHECK(toks[0].text == "emit");
    CHECK(toks[2].pos.line == 3);
    CHECK(toks[2].pos.column == 3);
    CHECK(toks[3].kind == Tok::ColonColon);
    CHECK(toks[5].kind == Tok::Arrow);
    CHECK(toks[6].kind == Tok::End);
}

TEST_CASE("generated names lex as identifiers") {
    auto toks = tokenize("#12 @0 %3 $4");
    for (int i = 0; i < 4; ++i) CHECK(toks[i].kind == Tok::Ident);
    CHECK(toks[0].text == "#12");
    CHECK_THROWS_AS(tokenize("emit s ?"), SyntaxError);
    CHECK_THROWS_AS(tokenize("/* open"), SyntaxError);
}

TEST_CASE("syntax errors are positioned") {
    CHECK(first_error("signal s : 1;\nmain = emit s ||;") == "2:17: expected a process, found ';'");
    CHECK(first_error("main = present s(x) { 0 } 0;").rfind("1:27:", 0) == 0);
}

TEST_CASE("parser recovers and reports several errors") {
    try {
        parse_module("A() = emit;\nB() = ||;\nmain = 0;");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.diagnostics().size() == 2);
        CHECK(e.diagnostics()[1].pos.line == 2);
    }
}

TEST_CASE("duplicate definitions are rejected") {
    CHECK(first_error("A() = 0;\nA() = 0;").find("duplicate thread") != std::string::npos);
    CHECK(first_error("A(x, x) = 0;").find("duplicate parameter") != std::string::npos);
    CHECK(first_error("main = 0;\nmain = 0;").find("duplicate main") != std::string::npos);
    CHECK(first_error("type t = a | b;\ntype u = a;").find("duplicate constructor") != std::string::npos);
}

TEST_CASE("unknown constructors are reported at parse time") {
    CHECK(first_error("signal s : 1;\nmain = emit s foo(*);").find("unknown constructor") != std::string::npos);
}

TEST_CASE("pause, tau and choice expand into the core calculus") {
    Module m = parse_module("signal a, b : 1;\nK() = 0;");
    auto pause = parse_process("pause.K()", m);
    const auto* n = std::get_if<New>(&pause->node);
    REQUIRE(n);
    const auto* pr = std::get_if<Present>(&n->body->node);
    REQUIRE(pr);
    CHECK(pr->signal == n->signal);
    CHECK(pr->cont.thread == "K");

    auto tau = parse_process("tau.emit a", m);
    CHECK(std::holds_alternative<MatchVal>(tau->node));

    auto choice = parse_process("emit a + emit b", m);
    CHECK(std::holds_alternative<New>(choice->node));
}

TEST_CASE("a pause before a non-call body lifts the body into a thread") {
    Module m = parse_module("signal a, b : 1;\nmain = pause.(emit a || emit b);");
    bool lifted = false;
    for (const auto& [name, def] : m.threads)
        if (name.rfind("_k", 0) == 0) {
            lifted = true;
            CHECK(def.params == std::vector<std::string>{"a", "b"});
        }
    CHECK(lifted);
}

TEST_CASE("printing then parsing is a fixed point on the corpus") {
    for (const char* f : {"server_client.spi", "persistence.spi", "order_choice.spi", "tau_loop.spi", "pairs.spi"}) {
        CAPTURE(std::string(f));
        Module m = load_file(default_corpus_dir() / f);
        std::string once = print_module(m);
        Module again = parse_module(once);
        CHECK(print_module(again) == once);
        CHECK(typecheck(again).ok());
    }
}

TEST_CASE("functions evaluate by their first matching equation") {
    Module m = load_file(default_corpus_dir() / "server_client.spi");
    CHECK(to_string(eval_expr(parse_term("f(b0)", m), m)) == "b1");
    CHECK(to_string(eval_expr(parse_term("f(f(b0))", m), m)) == "b0");
    CHECK(to_string(parse_term("b0 :: [b1]", m)) == "[b0; b1]");
}

TEST_CASE("function evaluation reports exhausted fuel and missing equations") {
    Module m = parse_module("type n = z | s(n);\nfun loop : (n) -> n;\nfun loop(x) = loop(x);\n"
                            "fun pred : (n) -> n;\nfun pred(s(x)) = x;");
    m.fuel = 50;
    CHECK_THROWS_AS(eval_expr(parse_term("loop(z)", m), m), EvalError);
    CHECK_THROWS_WITH_AS(eval_expr(parse_term("pred(z)", m), m), "no matching equation for pred(z)", EvalError);
}

TEST_CASE("the server and client are well typed") {
    Module m = load_file(default_corpus_dir() / "server_client.spi");
    auto report = typecheck(m);
    REQUIRE(report.ok());
    CHECK(report.bindings.at("Server.s") == "Sig(request)");
    CHECK(report.bindings.at("Handle.l") == "List(request)");
    CHECK(report.bindings.at("Client.t") == "Sig(bit)");
}

TEST_CASE("ill-typed programs are rejected with a diagnostic") {
    CHECK(mentions(type_errors("type bit = b0 | b1;\nsignal s : 1;\nmain = emit s b0;"), "type mismatch"));
    CHECK(mentions(type_errors("type bit = b0 | b1;\nA(x) = present x(y) { 0 } else 0;\nmain = A(b0);"),
                   "type mismatch"));
    CHECK(mentions(type_errors("A(x) = 0;\nmain = A();"), "arity"));
    CHECK(mentions(type_errors("type bit = b0 | b1;\nA(l) = 0;\nB(x) = pause.A(!x);\nmain = B(b0);"), "expected Sig("));
    CHECK(mentions(type_errors("main = Missing();"), "unknown thread"));
}

TEST_CASE("load_file replaces the inputs with an alphabet file") {
    auto dir = std::filesystem::temp_directory_path() / "sigpi_alphabet_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "alpha.spi") << "input t : b0, b1;\n";
    }
    Module m = load_file(default_corpus_dir() / "server_client.spi", dir / "alpha.spi");
    REQUIRE(m.inputs.size() == 1);
    CHECK(m.inputs[0].values.size() == 2);
    std::filesystem::remove_all(dir);
}
