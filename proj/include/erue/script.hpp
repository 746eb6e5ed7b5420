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

#ifndef ERUE_SCRIPT_HPP
#define ERUE_SCRIPT_HPP

#include <optional>
#include <string>
#include <vector>

#include "erue/clause.hpp"
#include "erue/rules.hpp"

namespace erue {

// One derivation line: result ids, rule label with optional star (iterate up
// to 3 times) and optional FlexRig binding, premise ids, and the expected
// clause(s). Cnf steps may produce a pair of clauses and thus carry two ids.
struct ProofStep {
  std::vector<std::string> ids;
  Rule rule = Rule::Res;
  bool starred = false;
  std::vector<std::string> premises;
  std::optional<std::string> binding_var;
  std::optional<Term> binding;
  std::vector<Clause> expected;  // empty Clause encodes `expect empty`
  int line = 0;

  bool expects_empty() const { return expected.size() == 1 && expected[0].empty(); }
};

struct ProofScript {
  std::string name;         // label for reports
  std::string problem_ref;  // path as written, or "builtin:..."
  Problem problem;
  std::vector<ProofStep> steps;
};

// Canonical text form; parse(show(s)) reproduces s up to whitespace.
std::string show_script(const ProofScript& s);

// A FlexRig binding template `bind X := t`, matched modulo renaming.
struct Hint {
  std::string var;
  Term pattern;
};

// The bundled problem {C1: g(f(a)) = a, C2: f(g(X)) != X} and the two
// refutation scripts for it, keyed "ref1" (the flex-rigid refutation) and
// "ref2" (the reflexivity-literal refutation).
Problem builtin_problem();
ProofScript builtin_script(const std::string& key);
std::vector<std::string> builtin_script_keys();

struct BuiltinScripts {
  ProofScript refutation_1;
  ProofScript refutation_2;
};
BuiltinScripts builtin_scripts();

}  // namespace erue

#endif  // ERUE_SCRIPT_HPP
