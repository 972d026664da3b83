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

#include "sigpi/printer.hpp"

namespace sigpi {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void print_args(const std::vector<TermPtr>& args, std::string& out) {
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ", ";
        out += to_string(args[i]);
    }
    out += ')';
}

void print(const Proc& p, std::string& out);

// Branch positions parse a single choice, so a parallel body needs parens.
void print_operand(const Proc& p, std::string& out) {
    bool paren = std::holds_alternative<Par>(p.node);
    if (paren) out += '(';
    print(p, out);
    if (paren) out += ')';
}

void print(const Proc& p, std::string& out) {
    std::visit(Overloaded{
                   [&](const Nil&) { out += '0'; },
                   [&](const Call& c) { out += to_string(c); },
                   [&](const Emit& e) {
                       out += "emit " + e.signal + ' ';
                       out += to_string(e.value);
                   },
                   [&](const Present& pr) {
                       out += "present " + pr.signal + '(' + pr.var + ") { ";
                       print(*pr.body, out);
                       out += " } else " + to_string(pr.cont);
                   },
                   [&](const MatchSig& m) {
                       out += "if " + m.lhs + " = " + m.rhs + " then ";
                       print_operand(*m.then_branch, out);
                       out += " else ";
                       print_operand(*m.else_branch, out);
                   },
                   [&](const MatchVal& m) {
                       out += "match " + to_string(m.subject) + " with " + to_string(m.pattern) + " -> ";
                       print_operand(*m.then_branch, out);
                       out += " | _ -> ";
                       print_operand(*m.else_branch, out);
                   },
                   [&](const New& n) {
                       out += "new " + n.signal + " in ";
                       print_operand(*n.body, out);
                   },
                   [&](const Par& par) {
                       for (std::size_t i = 0; i < par.parts.size(); ++i) {
                           if (i) out += " || ";
                           print_operand(*par.parts[i], out);
                       }
                   },
               },
               p.node);
}

}  // namespace

std::string to_string(const Call& c) {
    std::string out = c.thread;
    print_args(c.args, out);
    return out;
}

std::string to_string(const Proc& p) {
    std::string out;
    print(p, out);
    return out;
}

std::string print_module(const Module& m) {
    std::string out;
    for (const auto& t : m.types) {
        out += "type " + t.name + " =";
        for (std::size_t i = 0; i < t.ctors.size(); ++i) {
            const ConstructorDef& c = m.ctors.at(t.ctors[i]);
            out += i ? " | " : " ";
            out += c.name;
            if (!c.args.empty()) {
                out += '(';
                for (std::size_t k = 0; k < c.args.size(); ++k) out += (k ? ", " : "") + to_string(*c.args[k]);
                out += ')';
            }
        }
        out += ";\n";
    }
    for (const auto& name : m.function_order) {
        const FunctionDef& f = m.functions.at(name);
        out += "fun " + name + " : (";
        for (std::size_t k = 0; k < f.params.size(); ++k) out += (k ? ", " : "") + to_string(*f.params[k]);
        out += ") -> " + to_string(*f.result) + ";\n";
        for (const auto& eq : f.equations) {
            out += "fun " + name;
            print_args(eq.patterns, out);
            out += " = " + to_string(eq.body) + ";\n";
        }
    }
    for (const auto& [name, type] : m.signals) out += "signal " + name + " : " + to_string(*type->arg) + ";\n";
    for (const auto& in : m.inputs) {
        out += "input " + in.signal + " :";
        for (std::size_t k = 0; k < in.values.size(); ++k) out += (k ? ", " : " ") + to_string(in.values[k]);
        out += ";\n";
    }
    for (const auto& name : m.thread_order) {
        const ThreadDef& d = m.threads.at(name);
        out += name + '(';
        for (std::size_t k = 0; k < d.params.size(); ++k) out += (k ? ", " : "") + d.params[k];
        out += ") = " + to_string(d.body) + ";\n";
    }
    if (m.main) out += "main = " + to_string(m.main) + ";\n";
    return out;
}

}  // namespace sigpi
