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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigpi/export.hpp"
#include "sigpi/program.hpp"

namespace sigpi {

class TypeError : public std::runtime_error {
  public:
    explicit TypeError(const std::vector<std::string>& errors);
};

std::string read_file(const std::filesystem::path& path);

/// Parses and typechecks a source text; throws SyntaxError or TypeError.
Module load_module(const std::string& source);

/// As load_module. When `alphabet` is non-empty its `input` declarations
/// replace those of the source.
Module load_file(const std::filesystem::path& path, const std::filesystem::path& alphabet = {});

/// One bundled example with its expected outcome, as listed in
/// `expectations.json`.
struct CorpusCase {
    std::string name;
    std::string kind;
    json data;
};

struct CaseOutcome {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string actual;
    double seconds = 0;
};

/// Throws std::runtime_error when the directory has no expectations or
/// lists no case.
std::vector<CorpusCase> load_corpus(const std::filesystem::path& dir);

CaseOutcome run_case(const CorpusCase& c, const std::filesystem::path& dir, const Bounds& b);

/// Two processes over one definition table, for bisim cases.
struct ProcessPair {
    std::string name;
    Module defs;
    ProcPtr left;
    ProcPtr right;
};

ProcessPair load_pair(const CorpusCase& c, const std::filesystem::path& dir);

/// Directory of the bundled corpus in the source tree.
std::filesystem::path default_corpus_dir();

}  // namespace sigpi
