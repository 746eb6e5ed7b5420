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

#ifndef ERUE_RULES_HPP
#define ERUE_RULES_HPP

#include <optional>
#include <string>
#include <vector>

#include "erue/clause.hpp"

namespace erue {

// The rule labels appearing in derivations. Solve covers three kernel
// operations (subst-drop, subst-keep, chain); the checker resolves the label
// by trying the modes in that fixed order.
enum class Rule { Res, Dec, Solve, Triv, FlexRig, Fac, Equiv, Cnf };

enum class SolveMode { SubstDrop, SubstKeep, Chain };

std::string rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);
std::string solve_mode_name(SolveMode m);

// One recorded rule application. Positions are 0-based literal indices into
// the (renamed, for Res) premises; results carry the produced clauses.
struct RuleApplication {
  Rule rule;
  std::vector<std::string> premises;
  std::vector<std::size_t> positions;
  std::optional<Term> binding;            // FlexRig
  std::optional<std::string> binding_var; // FlexRig
  std::optional<SolveMode> mode;          // Solve
  std::vector<Clause> results;
};

// --- Inference rules -------------------------------------------------------
//
// All rules take 0-based literal positions, throw RuleError when a
// precondition fails, and return clauses with empty ids (callers assign ids).
// Every output satisfies the kernel invariants: well-typed, beta-normal,
// o-typed atoms, clause-scoped variables.

// RUE resolution: literal i of c and literal j of d must have opposite
// polarities. d is always renamed apart from c first. Literal i is replaced
// in place by the disagreement constraint [atom_i =o atom_j]^F and the rest
// of the renamed d is appended.
Clause resolve(const Clause& c, std::size_t i, const Clause& d, std::size_t j);

// Decomposition: literal i is negative with atom h(A1..An) = h(V1..Vn) for a
// rigid head h (a signature constant, or an equality constant with identical
// type index on both sides). The literal is replaced by [A1=V1]^F .. [An=Vn]^F;
// n = 0 deletes it.
Clause decompose(const Clause& c, std::size_t i);

// Solve, substitution reading: literal i is negative with atom X = u or
// u = X, X a variable not free in u. {X -> u} is applied to the whole clause;
// the literal is kept in instantiated form when keep is set, else dropped.
Clause solve_subst(const Clause& c, std::size_t i, bool keep);

// Solve, chain reading: literal i has atom s = X and literal j has atom
// X = u for the same X. Both are replaced by the single literal [s = u]^F;
// no substitution is applied elsewhere.
Clause solve_chain(const Clause& c, std::size_t i, std::size_t j);

// Triv: removes one negative equation whose sides are alpha-equal.
Clause trivial(const Clause& c, std::size_t i);

// FlexRig: literal i is a negative flex-rigid disequation; binding is a
// well-typed beta-normal term for the flexible head variable F, either an
// imitation of the rigid head or a projection, with fresh helper variables
// applied to bound arguments and/or free variables of the literal. Returns
// c with the constraint [F = binding]^F appended; no substitution happens.
Clause flex_rigid(const Clause& c, std::size_t i, const Term& binding);

// Factoring: literals i and j (i != j) share a polarity; literal j is
// replaced by the constraint [atom_i =o atom_j]^F.
Clause factor(const Clause& c, std::size_t i, std::size_t j);

// Equivalence expansion: a negative equation P =o Q between propositions
// becomes [(P & Q) |o| (~P & ~Q)]^F.
Clause equiv(const Clause& c, std::size_t i);

// One clausification step on a literal whose atom has a top connective.
std::vector<Clause> cnf_step(const Clause& c, std::size_t i);

// Clausification closure: iterates cnf_step until every literal atom is
// connective-free. Terminates because each step strictly reduces the total
// connective count.
std::vector<Clause> cnf_all(const Clause& c);

// --- Applicability helpers (shared by checker and prover) ------------------

struct FlexRigidInfo {
  std::size_t lit;
  bool flex_on_left;
  Term flex_var;    // the head variable F
  Term rigid_side;  // the opposite side
};
std::optional<FlexRigidInfo> flex_rigid_kind(const Clause& c, std::size_t i);

enum class DecStatus {
  Applicable,
  Positive,
  NotEquation,
  AbstractionSide,
  FlexHead,
  ConnectiveHead,
  HeadClash,
  TypeIndexClash,  // equality heads at different types
  ArityMismatch,
};
DecStatus dec_status(const Clause& c, std::size_t i, std::string* left_head = nullptr,
                     std::string* right_head = nullptr);

// Chosen orientation for solve_subst, if the literal admits one.
struct SolveBinding {
  Term var;
  Term image;
};
std::optional<SolveBinding> solve_binding(const Clause& c, std::size_t i);

bool trivial_applicable(const Clause& c, std::size_t i);
bool chain_applicable(const Clause& c, std::size_t i, std::size_t j);

// All imitation and projection bindings for the flex literal i with helper
// nesting up to `helper_depth` (1 = helpers applied to variables only).
// Helper argument vectors range over the bound arguments of F alone and over
// bound arguments plus the free variables of the literal.
std::vector<Term> enumerate_bindings(const Clause& c, std::size_t i, std::size_t helper_depth);

// Instantiates a hint template for a concrete flex variable: the hint's own
// variable is mapped to flex_var, every other template variable becomes a
// fresh helper with respect to `target`. Returns nothing on a type mismatch.
std::optional<Term> instantiate_hint(const std::string& hint_var, const Term& pattern,
                                     const Term& flex_var, const Clause& target);

}  // namespace erue

#endif  // ERUE_RULES_HPP
