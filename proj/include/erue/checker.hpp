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

#ifndef ERUE_CHECKER_HPP
#define ERUE_CHECKER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "erue/script.hpp"

namespace erue {

struct CheckOptions {
  std::size_t max_star_iterations = 3;
  std::size_t helper_depth = 1;  // FlexRig enumeration bound when no binding given
};

struct StepResult {
  std::vector<std::string> ids;
  Rule rule = Rule::Res;
  bool starred = false;
  std::vector<std::string> premises;
  bool verified = false;
  std::optional<SolveMode> mode;  // Solve steps report the accepted mode
  std::size_t iterations = 1;     // starred rules report how many applications
  std::vector<Clause> derived;    // the expected clauses, bound on success
  std::string failure;            // reason when not verified
  int line = 0;
};

struct CheckReport {
  enum class Verdict { Proved, NoGoal, Failed };

  Verdict verdict = Verdict::NoGoal;
  std::vector<StepResult> steps;
  std::size_t derived_count = 0;
  std::vector<std::string> chain_steps;  // result ids of chain-mode Solve steps
  std::optional<std::size_t> failed_step;
  std::string failure;
  int failed_line = 0;

  // 0 verified-to-empty, 1 verified-no-goal, 2 step failure.
  int exit_code() const;
};

// Verifies one step against the current id -> clause state. The checker
// searches the rule's bounded parameter space (literal positions, Solve modes
// in the order subst-drop / subst-keep / chain, up to 3 iterations for
// starred labels, connective closure for Cnf, given or enumerated FlexRig
// bindings) and accepts iff some parameterization reproduces the expected
// clause(s) up to variant equality. On success the expected clauses are bound
// to the result ids.
bool check_step(std::map<std::string, Clause>& state, const ProofStep& step, StepResult& out,
                const CheckOptions& options = {});

// Runs check_step over all lines, stopping at the first failure. The verdict
// is Proved iff every step verified and the final expected clause is [].
CheckReport check_script(const ProofScript& script, const CheckOptions& options = {});

// Human-readable table mirroring the derivation layout.
std::string show_report(const ProofScript& script, const CheckReport& report);
// Machine-readable: one `<ids> <rule> <status> [<mode>]` line per step.
std::string show_report_machine(const CheckReport& report);

// Labeled digraph (DOT): clause nodes, premise -> conclusion edges labeled
// with rule names. Only meaningful for scripts that verify.
std::string to_dot(const ProofScript& script);

}  // namespace erue

#endif  // ERUE_CHECKER_HPP
