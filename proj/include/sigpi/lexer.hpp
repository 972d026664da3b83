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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigpi {

struct Position {
    int line = 1;
    int column = 1;
};

struct Diagnostic {
    Position pos;
    std::string message;

    std::string str() const;
};

class SyntaxError : public std::runtime_error {
  public:
    explicit SyntaxError(std::vector<Diagnostic> diags);
    const std::vector<Diagnostic>& diagnostics() const { return diags_; }

  private:
    std::vector<Diagnostic> diags_;
};

enum class Tok {
    Ident,
    Number,
    Star,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
    ColonColon,
    Equals,
    Bar,
    BarBar,
    Plus,
    Arrow,
    Bang,
    Dot,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    Position pos;
};

/// Splits source text into tokens. `//` and `/* */` comments are skipped.
/// Identifiers are `[A-Za-z_][A-Za-z0-9_']*`, plus generated names such as `#3`.
std::vector<Token> tokenize(std::string_view source);

const char* tok_name(Tok t);

}  // namespace sigpi
