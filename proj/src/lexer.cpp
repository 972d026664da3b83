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

#include "sigpi/lexer.hpp"

#include <cctype>

namespace sigpi {

std::string Diagnostic::str() const {
    return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
}

namespace {

std::string join_diags(const std::vector<Diagnostic>& diags) {
    std::string out;
    for (const auto& d : diags) {
        if (!out.empty()) out += '\n';
        out += d.str();
    }
    return out;
}

}  // namespace

SyntaxError::SyntaxError(std::vector<Diagnostic> diags)
    : std::runtime_error(join_diags(diags)), diags_(std::move(diags)) {}

const char* tok_name(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Star: return "'*'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::ColonColon: return "'::'";
    case Tok::Equals: return "'='";
    case Tok::Bar: return "'|'";
    case Tok::BarBar: return "'||'";
    case Tok::Plus: return "'+'";
    case Tok::Arrow: return "'->'";
    case Tok::Bang: return "'!'";
    case Tok::Dot: return "'.'";
    case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    Position pos;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
            if (src[i] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
        }
    };
    auto emit = [&](Tok kind, std::size_t len) {
        out.push_back(Token{kind, std::string(src.substr(i, len)), pos});
        advance(len);
    };

    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (src.compare(i, 2, "//") == 0) {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (src.compare(i, 2, "/*") == 0) {
            Position start = pos;
            advance(2);
            while (i < src.size() && src.compare(i, 2, "*/") != 0) advance(1);
            if (i >= src.size()) throw SyntaxError({Diagnostic{start, "unterminated comment"}});
            advance(2);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t len = 1;
            while (i + len < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i + len])) || src[i + len] == '_' || src[i + len] == '\''))
                ++len;
            emit(Tok::Ident, len);
            continue;
        }
        // Generated names: hoisted `#k`, extruded `@k`, inner `%k`, temporary `$k`.
        if ((c == '#' || c == '@' || c == '%' || c == '$') && i + 1 < src.size() &&
            std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
            std::size_t len = 1;
            while (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len]))) ++len;
            emit(Tok::Ident, len);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t len = 1;
            while (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len]))) ++len;
            emit(Tok::Number, len);
            continue;
        }
        if (src.compare(i, 2, "::") == 0) { emit(Tok::ColonColon, 2); continue; }
        if (src.compare(i, 2, "||") == 0) { emit(Tok::BarBar, 2); continue; }
        if (src.compare(i, 2, "->") == 0) { emit(Tok::Arrow, 2); continue; }
        switch (c) {
        case '*': emit(Tok::Star, 1); continue;
        case '(': emit(Tok::LParen, 1); continue;
        case ')': emit(Tok::RParen, 1); continue;
        case '{': emit(Tok::LBrace, 1); continue;
        case '}': emit(Tok::RBrace, 1); continue;
        case '[': emit(Tok::LBracket, 1); continue;
        case ']': emit(Tok::RBracket, 1); continue;
        case ',': emit(Tok::Comma, 1); continue;
        case ';': emit(Tok::Semi, 1); continue;
        case ':': emit(Tok::Colon, 1); continue;
        case '=': emit(Tok::Equals, 1); continue;
        case '|': emit(Tok::Bar, 1); continue;
        case '+': emit(Tok::Plus, 1); continue;
        case '!': emit(Tok::Bang, 1); continue;
        case '.': emit(Tok::Dot, 1); continue;
        default: break;
        }
        throw SyntaxError({Diagnostic{pos, std::string("unexpected character '") + c + "'"}});
    }
    out.push_back(Token{Tok::End, "", pos});
    return out;
}

}  // namespace sigpi
