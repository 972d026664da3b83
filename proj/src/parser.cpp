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

#include "sigpi/parser.hpp"

#include <algorithm>
#include <set>

namespace sigpi {

namespace {

const std::set<std::string, std::less<>> kKeywords = {
    "type", "fun", "signal", "input", "main", "emit", "present", "else", "if",
    "then", "match", "with", "new", "in", "pause", "tau",
};

bool is_keyword(const std::string& s) { return kKeywords.count(s) > 0; }

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

/// Lifted `pause.P` body awaiting resolution of its parameters.
struct PendingLift {
    std::string name;
    ProcPtr body;
};

class Parser {
  public:
    Parser(std::string_view source, Module& module) : toks_(tokenize(source)), m_(module) {
        for (const auto& [name, def] : m_.threads)
            if (name.rfind("_k", 0) == 0) lift_counter_ = std::max(lift_counter_, std::atoi(name.c_str() + 2));
    }

    void parse_file() {
        while (!at(Tok::End)) {
            try {
                parse_decl();
            } catch (const SyntaxError& e) {
                diags_.insert(diags_.end(), e.diagnostics().begin(), e.diagnostics().end());
                recover();
            }
        }
        if (!diags_.empty()) throw SyntaxError(diags_);
        finish();
    }

    ProcPtr parse_standalone() {
        auto p = parse_proc();
        expect(Tok::End);
        finish();
        return resolve_proc(p);
    }

    TermPtr parse_standalone_term() {
        auto t = parse_expr(false);
        expect(Tok::End);
        return resolve_term(t);
    }

  private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;
    Module& m_;
    std::vector<Diagnostic> diags_;
    std::map<const Term*, Position> term_pos_;
    std::vector<PendingLift> lifts_;
    std::set<std::string> lifted_resolved_;
    std::vector<std::pair<ThreadDef, Position>> raw_threads_;
    std::vector<std::pair<std::string, std::vector<Equation>>> raw_equations_;
    ProcPtr raw_main_;
    int lift_counter_ = 0;
    int fresh_counter_ = 0;

    // -- token helpers -----------------------------------------------------

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
    bool at(Tok t) const { return peek().kind == t; }
    bool at_kw(const char* kw) const { return at(Tok::Ident) && peek().text == kw; }

    [[noreturn]] void fail(const Position& pos, std::string msg) { throw SyntaxError({Diagnostic{pos, std::move(msg)}}); }

    const Token& expect(Tok t) {
        if (!at(t)) fail(peek().pos, std::string("expected ") + tok_name(t) + ", found " + describe(peek()));
        return toks_[i_++];
    }

    void expect_kw(const char* kw) {
        if (!at_kw(kw)) fail(peek().pos, std::string("expected '") + kw + "', found " + describe(peek()));
        ++i_;
    }

    bool accept(Tok t) {
        if (!at(t)) return false;
        ++i_;
        return true;
    }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::Ident || t.kind == Tok::Number) return "'" + t.text + "'";
        return tok_name(t.kind);
    }

    std::string ident() {
        const Token& t = expect(Tok::Ident);
        if (is_keyword(t.text)) fail(t.pos, "unexpected keyword '" + t.text + "'");
        return t.text;
    }

    void recover() {
        while (!at(Tok::End) && !at(Tok::Semi)) ++i_;
        accept(Tok::Semi);
    }

    std::string fresh_signal() { return "_z" + std::to_string(++fresh_counter_); }

    // -- declarations ------------------------------------------------------

    void parse_decl() {
        if (at_kw("type")) return parse_type_decl();
        if (at_kw("fun")) return parse_fun_decl();
        if (at_kw("signal")) return parse_signal_decl();
        if (at_kw("input")) return parse_input_decl();
        if (at_kw("main")) {
            Position pos = peek().pos;
            ++i_;
            expect(Tok::Equals);
            if (raw_main_) fail(pos, "duplicate main program");
            raw_main_ = parse_proc();
            expect(Tok::Semi);
            return;
        }
        Position pos = peek().pos;
        ThreadDef def;
        def.name = ident();
        expect(Tok::LParen);
        if (!at(Tok::RParen)) {
            do def.params.push_back(ident());
            while (accept(Tok::Comma));
        }
        expect(Tok::RParen);
        expect(Tok::Equals);
        def.body = parse_proc();
        expect(Tok::Semi);
        std::set<std::string> seen;
        for (const auto& p : def.params)
            if (!seen.insert(p).second) fail(pos, "duplicate parameter " + p + " in " + def.name);
        for (const auto& [other, other_pos] : raw_threads_)
            if (other.name == def.name) fail(pos, "duplicate thread definition " + def.name);
        if (m_.threads.count(def.name)) fail(pos, "duplicate thread definition " + def.name);
        raw_threads_.emplace_back(std::move(def), pos);
    }

    TypePtr parse_type() {
        if (at(Tok::Number)) {
            const Token& t = expect(Tok::Number);
            if (t.text != "1") fail(t.pos, "unknown type " + t.text);
            return unit_type();
        }
        Position pos = peek().pos;
        std::string name = ident();
        if (name == "Sig" || name == "List") {
            expect(Tok::LParen);
            auto arg = parse_type();
            expect(Tok::RParen);
            return name == "Sig" ? sig_type(arg) : list_type(arg);
        }
        (void)pos;
        return named_type(name);
    }

    void parse_type_decl() {
        expect_kw("type");
        Position pos = peek().pos;
        TypeDef def;
        def.name = ident();
        if (def.name == "bool" || std::any_of(m_.types.begin(), m_.types.end(), [&](const TypeDef& t) { return t.name == def.name; }))
            fail(pos, "duplicate type " + def.name);
        expect(Tok::Equals);
        do {
            Position cpos = peek().pos;
            ConstructorDef ctor;
            ctor.name = ident();
            ctor.result = named_type(def.name);
            if (accept(Tok::LParen)) {
                if (!at(Tok::RParen)) {
                    do ctor.args.push_back(parse_type());
                    while (accept(Tok::Comma));
                }
                expect(Tok::RParen);
            }
            if (m_.ctors.count(ctor.name)) fail(cpos, "duplicate constructor " + ctor.name);
            def.ctors.push_back(ctor.name);
            m_.ctors[ctor.name] = std::move(ctor);
        } while (accept(Tok::Bar));
        expect(Tok::Semi);
        m_.types.push_back(std::move(def));
    }

    void parse_fun_decl() {
        expect_kw("fun");
        Position pos = peek().pos;
        std::string name = ident();
        if (accept(Tok::Colon)) {
            FunctionDef def;
            def.name = name;
            expect(Tok::LParen);
            if (!at(Tok::RParen)) {
                do def.params.push_back(parse_type());
                while (accept(Tok::Comma));
            }
            expect(Tok::RParen);
            expect(Tok::Arrow);
            def.result = parse_type();
            expect(Tok::Semi);
            if (m_.functions.count(name)) fail(pos, "duplicate function signature " + name);
            m_.functions[name] = std::move(def);
            m_.function_order.push_back(name);
            return;
        }
        Equation eq;
        expect(Tok::LParen);
        if (!at(Tok::RParen)) {
            do eq.patterns.push_back(parse_expr(false));
            while (accept(Tok::Comma));
        }
        expect(Tok::RParen);
        expect(Tok::Equals);
        eq.body = parse_expr(false);
        expect(Tok::Semi);
        for (auto& [fname, eqs] : raw_equations_)
            if (fname == name) {
                eqs.push_back(std::move(eq));
                return;
            }
        raw_equations_.push_back({name, {std::move(eq)}});
    }

    void parse_signal_decl() {
        expect_kw("signal");
        std::vector<std::string> names;
        do names.push_back(ident());
        while (accept(Tok::Comma));
        expect(Tok::Colon);
        auto carried = parse_type();
        expect(Tok::Semi);
        for (auto& n : names) m_.signals.emplace_back(n, sig_type(carried));
    }

    void parse_input_decl() {
        expect_kw("input");
        InputDecl decl;
        decl.signal = ident();
        expect(Tok::Colon);
        do decl.values.push_back(parse_expr(false));
        while (accept(Tok::Comma));
        expect(Tok::Semi);
        m_.inputs.push_back(std::move(decl));
    }

    // -- processes -----------------------------------------------------------

    ProcPtr parse_proc() {
        std::vector<ProcPtr> parts{parse_choice()};
        while (accept(Tok::BarBar)) parts.push_back(parse_choice());
        return make_par(std::move(parts));
    }

    ProcPtr parse_choice() {
        auto left = parse_unary();
        while (accept(Tok::Plus)) {
            auto right = parse_unary();
            left = make_choice(left, right, fresh_signal());
        }
        return left;
    }

    bool starts_expr() const {
        if (at(Tok::Star) || at(Tok::LBracket) || at(Tok::LParen)) return true;
        return at(Tok::Ident) && !is_keyword(peek().text);
    }

    Call parse_cont() {
        if (at(Tok::Number) && peek().text == "0") {
            ++i_;
            return Call{kHaltThread, {}};
        }
        std::string name = ident();
        expect(Tok::LParen);
        std::vector<TermPtr> args;
        if (!at(Tok::RParen)) {
            do args.push_back(parse_expr(true));
            while (accept(Tok::Comma));
        }
        expect(Tok::RParen);
        return Call{name, std::move(args)};
    }

    ProcPtr parse_unary() {
        const Token& t = peek();
        if (t.kind == Tok::Number) {
            if (t.text != "0") fail(t.pos, "unexpected number " + t.text);
            ++i_;
            return make_nil();
        }
        if (accept(Tok::LParen)) {
            auto p = parse_proc();
            expect(Tok::RParen);
            return p;
        }
        if (t.kind != Tok::Ident) fail(t.pos, "expected a process, found " + describe(t));

        if (t.text == "emit") {
            ++i_;
            std::string s = ident();
            TermPtr value = starts_expr() ? parse_expr(false) : make_unit();
            return make_emit(s, value);
        }
        if (t.text == "present") {
            ++i_;
            std::string s = ident();
            expect(Tok::LParen);
            std::string x = ident();
            expect(Tok::RParen);
            expect(Tok::LBrace);
            auto body = parse_proc();
            expect(Tok::RBrace);
            expect_kw("else");
            return make_present(s, x, body, parse_cont());
        }
        if (t.text == "if") {
            ++i_;
            std::string a = ident();
            expect(Tok::Equals);
            std::string b = ident();
            expect_kw("then");
            auto p = parse_choice();
            expect_kw("else");
            auto q = parse_choice();
            return make_match_sig(a, b, p, q);
        }
        if (t.text == "match") {
            ++i_;
            auto subject = parse_expr(false);
            expect_kw("with");
            auto pattern = parse_expr(false);
            expect(Tok::Arrow);
            auto p = parse_choice();
            expect(Tok::Bar);
            const Token& w = expect(Tok::Ident);
            if (w.text != kWildcard) fail(w.pos, "expected '_' for the default branch");
            expect(Tok::Arrow);
            auto q = parse_choice();
            return make_match_val(subject, pattern, p, q);
        }
        if (t.text == "new") {
            ++i_;
            std::vector<std::string> names;
            do names.push_back(ident());
            while (accept(Tok::Comma));
            expect_kw("in");
            auto body = parse_choice();
            for (auto it = names.rbegin(); it != names.rend(); ++it) body = make_new(*it, body);
            return body;
        }
        if (t.text == "pause") {
            ++i_;
            expect(Tok::Dot);
            if (at(Tok::Number) && peek().text == "0") {
                ++i_;
                return make_pause(Call{kHaltThread, {}}, fresh_signal());
            }
            if (at(Tok::Ident) && !is_keyword(peek().text) && peek(1).kind == Tok::LParen)
                return make_pause(parse_cont(), fresh_signal());
            auto body = parse_unary();
            std::string name = "_k" + std::to_string(++lift_counter_);
            lifts_.push_back(PendingLift{name, body});
            return make_pause(Call{name, {}}, fresh_signal());
        }
        if (t.text == "tau") {
            ++i_;
            expect(Tok::Dot);
            return make_tau(parse_unary());
        }
        if (is_keyword(t.text)) fail(t.pos, "unexpected keyword '" + t.text + "'");
        std::string name = ident();
        expect(Tok::LParen);
        std::vector<TermPtr> args;
        if (!at(Tok::RParen)) {
            do args.push_back(parse_expr(false));
            while (accept(Tok::Comma));
        }
        expect(Tok::RParen);
        return make_call(name, std::move(args));
    }

    // -- expressions ---------------------------------------------------------

    TermPtr located(TermPtr t, const Position& pos) {
        term_pos_[t.get()] = pos;
        return t;
    }

    TermPtr parse_expr(bool allow_deref) {
        auto head = parse_atom(allow_deref);
        if (accept(Tok::ColonColon)) return make_ctor(kConsCtor, {head, parse_expr(allow_deref)});
        return head;
    }

    TermPtr parse_atom(bool allow_deref) {
        const Token& t = peek();
        if (accept(Tok::Star)) return make_unit();
        if (accept(Tok::LParen)) {
            auto e = parse_expr(allow_deref);
            expect(Tok::RParen);
            return e;
        }
        if (accept(Tok::LBracket)) {
            std::vector<TermPtr> items;
            if (!at(Tok::RBracket)) {
                do items.push_back(parse_expr(allow_deref));
                while (accept(Tok::Semi));
            }
            expect(Tok::RBracket);
            return make_list(items);
        }
        if (at(Tok::Bang)) {
            if (!allow_deref) fail(t.pos, "dereference is only allowed in continuation arguments");
            ++i_;
            return make_deref(ident());
        }
        if (t.kind == Tok::Ident && !is_keyword(t.text)) {
            ++i_;
            if (accept(Tok::LParen)) {
                std::vector<TermPtr> args;
                if (!at(Tok::RParen)) {
                    do args.push_back(parse_expr(allow_deref));
                    while (accept(Tok::Comma));
                }
                expect(Tok::RParen);
                return located(make_ctor(t.text, std::move(args)), t.pos);
            }
            return located(make_var(t.text), t.pos);
        }
        fail(t.pos, "expected an expression, found " + describe(t));
    }

    // -- resolution ------------------------------------------------------------

    Position pos_of(const Term* t) const {
        auto it = term_pos_.find(t);
        return it == term_pos_.end() ? Position{} : it->second;
    }

    TermPtr resolve_term(const TermPtr& t) {
        switch (t->kind) {
        case Term::Kind::Var:
            if (m_.find_ctor(t->name)) return make_ctor(t->name);
            return t;
        case Term::Kind::Deref: return t;
        case Term::Kind::Fun:
        case Term::Kind::Ctor: {
            std::vector<TermPtr> args;
            for (const auto& a : t->args) args.push_back(resolve_term(a));
            if (m_.find_function(t->name)) return make_fun(t->name, std::move(args));
            if (!m_.find_ctor(t->name)) fail(pos_of(t.get()), "unknown constructor or function " + t->name);
            return make_ctor(t->name, std::move(args));
        }
        }
        return t;
    }

    TermPtr resolve_pattern(const TermPtr& t) {
        auto p = resolve_term(t);
        check_pattern(*p, pos_of(t.get()));
        auto vars = pattern_vars(*p);
        std::set<std::string> seen;
        for (const auto& v : vars)
            if (!seen.insert(v).second) fail(pos_of(t.get()), "pattern variable " + v + " occurs twice");
        return p;
    }

    void check_pattern(const Term& p, const Position& pos) {
        if (p.kind == Term::Kind::Fun) fail(pos, "function symbol " + p.name + " in pattern");
        for (const auto& a : p.args) check_pattern(*a, pos);
    }

    std::vector<TermPtr> resolve_terms(const std::vector<TermPtr>& ts) {
        std::vector<TermPtr> out;
        for (const auto& t : ts) out.push_back(resolve_term(t));
        return out;
    }

    Call resolve_call(const Call& c) {
        if (c.args.empty() && c.thread.rfind("_k", 0) == 0 && lifted_resolved_.count(c.thread)) {
            const ThreadDef* def = m_.find_thread(c.thread);
            std::vector<TermPtr> args;
            for (const auto& p : def->params) args.push_back(make_var(p));
            return Call{c.thread, std::move(args)};
        }
        return Call{c.thread, resolve_terms(c.args)};
    }

    ProcPtr resolve_proc(const ProcPtr& p) {
        return std::visit(
            Overloaded{
                [&](const Nil&) { return p; },
                [&](const Call& c) {
                    auto r = resolve_call(c);
                    return make_call(r.thread, std::move(r.args));
                },
                [&](const Emit& e) { return make_emit(e.signal, resolve_term(e.value)); },
                [&](const Present& pr) {
                    return make_present(pr.signal, pr.var, resolve_proc(pr.body), resolve_call(pr.cont));
                },
                [&](const MatchSig& m) {
                    return make_match_sig(m.lhs, m.rhs, resolve_proc(m.then_branch), resolve_proc(m.else_branch));
                },
                [&](const MatchVal& m) {
                    auto subject = resolve_term(m.subject);
                    auto pattern = resolve_pattern(m.pattern);
                    auto then_branch = resolve_proc(m.then_branch);
                    if (subject->kind == Term::Kind::Var) {
                        auto bound = pattern_vars(*pattern);
                        if (std::find(bound.begin(), bound.end(), subject->name) == bound.end() &&
                            occurs_free(*then_branch, subject->name))
                            fail(pos_of(m.subject.get()),
                                 "matched variable " + subject->name + " occurs free in the first branch");
                    }
                    return make_match_val(subject, pattern, then_branch, resolve_proc(m.else_branch));
                },
                [&](const New& n) { return make_new(n.signal, resolve_proc(n.body)); },
                [&](const Par& par) {
                    std::vector<ProcPtr> parts;
                    for (const auto& q : par.parts) parts.push_back(resolve_proc(q));
                    return make_par(std::move(parts));
                },
            },
            p->node);
    }

    void finish() {
        // Lifted bodies were registered innermost first, so each one's
        // callees already have their parameters fixed.
        for (auto& lift : lifts_) {
            auto body = resolve_proc(lift.body);
            auto fv = free_names(*body);
            ThreadDef def{lift.name, std::vector<std::string>(fv.begin(), fv.end()), body};
            m_.add_thread(std::move(def));
            lifted_resolved_.insert(lift.name);
        }
        lifts_.clear();

        for (auto& [def, pos] : raw_threads_) {
            try {
                def.body = resolve_proc(def.body);
                m_.add_thread(std::move(def));
            } catch (const SyntaxError& e) {
                diags_.insert(diags_.end(), e.diagnostics().begin(), e.diagnostics().end());
            }
        }
        raw_threads_.clear();

        for (auto& [name, eqs] : raw_equations_) {
            auto it = m_.functions.find(name);
            if (it == m_.functions.end()) {
                diags_.push_back(Diagnostic{{}, "equations for undeclared function " + name});
                continue;
            }
            for (auto& eq : eqs) {
                try {
                    Equation resolved;
                    for (const auto& pat : eq.patterns) resolved.patterns.push_back(resolve_pattern(pat));
                    resolved.body = resolve_term(eq.body);
                    it->second.equations.push_back(std::move(resolved));
                } catch (const SyntaxError& e) {
                    diags_.insert(diags_.end(), e.diagnostics().begin(), e.diagnostics().end());
                }
            }
        }
        raw_equations_.clear();

        for (auto& decl : m_.inputs) {
            try {
                for (auto& v : decl.values) v = resolve_term(v);
            } catch (const SyntaxError& e) {
                diags_.insert(diags_.end(), e.diagnostics().begin(), e.diagnostics().end());
            }
        }

        if (raw_main_) {
            try {
                m_.main = resolve_proc(raw_main_);
            } catch (const SyntaxError& e) {
                diags_.insert(diags_.end(), e.diagnostics().begin(), e.diagnostics().end());
            }
            raw_main_.reset();
        }
        if (!diags_.empty()) throw SyntaxError(diags_);
    }
};

}  // namespace

Module parse_module(std::string_view source) {
    Module m = builtin_module();
    Parser parser(source, m);
    parser.parse_file();
    return m;
}

ProcPtr parse_process(std::string_view source, Module& defs) {
    Parser parser(source, defs);
    return parser.parse_standalone();
}

TermPtr parse_term(std::string_view source, const Module& defs) {
    Module scratch = defs;
    Parser parser(source, scratch);
    return parser.parse_standalone_term();
}

}  // namespace sigpi
