// Copyright 2026 The erue Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ERUE_PARSE_HPP
#define ERUE_PARSE_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "erue/clause.hpp"
#include "erue/script.hpp"

namespace erue {

// Problem files: `%` comments, `const <name> : <type>.` declarations with
// types i, o and right-associative >, then `clause <Id> : <lit> ('|' <lit>)*.`
// lines. Literals are +( t ) / -( t ); terms use first-order application
// f(t, ...), infix =, connectives & / |o| / ~, and ^Y:i. t for lambdas.
// Uppercase identifiers are variables; their types are inferred per clause.
Problem parse_problem(const std::string& text, const std::string& source_label = "");
Problem load_problem(const std::filesystem::path& path);

// Scripts: a `problem "<path>"` line, then
//   step <Id>[,<Id>] = <Rule>[*](<Premise>[, <Premise>][; bind <Var> := <term>])
//       expect <clause-or-'empty'> [; <clause>]
// The problem supplies the signature for the expected clauses.
ProofScript parse_script(const std::string& text, const Problem& problem,
                         const std::string& source_label = "");
// First `problem` reference of a script text (needed before typing it).
std::string script_problem_ref(const std::string& text);
// Reads a script file, loading its problem relative to the script directory.
ProofScript load_script(const std::filesystem::path& path);

// Hint files: one `bind <Var> := <term>` per line.
std::vector<Hint> parse_hints(const std::string& text, const Signature& sig,
                              const std::string& source_label = "");
std::vector<Hint> load_hints(const std::filesystem::path& path, const Signature& sig);

// Single-fragment helpers, mainly for tests. Variable types must be inferable
// from the fragment itself.
Term parse_term(const std::string& text, const Signature& sig);
Clause parse_clause(const std::string& text, const Signature& sig, const std::string& id = "");

std::string read_file(const std::filesystem::path& path);

}  // namespace erue

#endif  // ERUE_PARSE_HPP
