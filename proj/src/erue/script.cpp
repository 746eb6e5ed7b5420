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

#include "erue/script.hpp"

#include "erue/error.hpp"
#include "erue/parse.hpp"

namespace erue {

std::string show_script(const ProofScript& s) {
  std::string out = "problem \"" + s.problem_ref + "\"\n";
  for (const ProofStep& step : s.steps) {
    out += "step ";
    for (std::size_t k = 0; k < step.ids.size(); ++k) {
      if (k) out += ",";
      out += step.ids[k];
    }
    out += " = " + rule_name(step.rule) + (step.starred ? "*" : "") + "(";
    for (std::size_t k = 0; k < step.premises.size(); ++k) {
      if (k) out += ", ";
      out += step.premises[k];
    }
    if (step.binding) out += "; bind " + *step.binding_var + " := " + step.binding->show();
    out += ") expect ";
    if (step.expects_empty()) {
      out += "empty";
    } else {
      for (std::size_t k = 0; k < step.expected.size(); ++k) {
        if (k) out += " ; ";
        out += step.expected[k].show();
      }
    }
    out += "\n";
  }
  return out;
}

namespace {

constexpr const char kBuiltinProblemRef[] = "builtin:counterexample";

constexpr const char kBuiltinProblemText[] = R"(% The classic two-clause set that separates first-order RUE resolution
% from its extensional higher-order variant.
const a : i.
const f : i>i.
const g : i>i.

clause C1 : +( g(f(a)) = a ).
clause C2 : -( f(g(X)) = X ).
)";

// Refutation I: one imitation binding for X up front, then plain RUE steps.
constexpr const char kRefutation1Text[] = R"(problem "builtin:counterexample"
step C3  = FlexRig(C2; bind X := f(H(X))) expect -( f(g(X)) = X ) | -( X = f(H(X)) )
step C4  = Solve(C3)    expect -( f(g(X)) = f(H(X)) )
step C5  = Dec(C4)      expect -( g(X) = H(X) )
step C6  = Res(C1, C5)  expect -( (g(f(a)) = a) = (g(X) = H(X)) )
step C7  = Dec(C6)      expect -( g(f(a)) = g(X) ) | -( a = H(X) )
step C8  = Dec(C7)      expect -( f(a) = X ) | -( a = H(X) )
step C9  = Solve(C8)    expect -( f(a) = f(a) ) | -( a = H(f(a)) )
step C10 = Triv(C9)     expect -( a = H(f(a)) )
step C11 = FlexRig(C10; bind H := ^Y:i. a) expect -( a = H(f(a)) ) | -( H = ^Y:i. a )
step C12 = Solve(C11)   expect -( a = a )
step C13 = Triv(C12)    expect empty
)";

// Refutation II: no binding for X; the positive reflexivity literal
// [f(a) = f(a)]^T is derived in C18 instead and resolved against C2.
constexpr const char kRefutation2Text[] = R"(problem "builtin:counterexample"
step C3  = Res(C1, C2)  expect -( (g(f(a)) = a) = (f(g(X)) = X) )
step C4  = Equiv(C3)    expect -( ((g(f(a)) = a) & (f(g(X)) = X)) |o| (~(g(f(a)) = a) & ~(f(g(X)) = X)) )
step C5,C6 = Cnf(C4)    expect +( g(f(a)) = a ) | +( f(g(X)) = X ) ; -( g(f(a)) = a ) | -( f(g(X)) = X )
step C7  = Res(C6, C1)  expect -( (g(f(a)) = a) = (g(f(a)) = a) ) | -( f(g(X)) = X )
step C8  = Dec*(C7)     expect -( f(a) = f(a) ) | -( a = a ) | -( f(g(X)) = X )
step C9  = Triv(C8)     expect -( f(a) = f(a) ) | -( f(g(X)) = X )
step C10 = Fac(C9)      expect -( f(a) = f(a) ) | -( (f(a) = f(a)) = (f(g(X)) = X) )
step C11 = Triv(C10)    expect -( (f(a) = f(a)) = (f(g(X)) = X) )
step C12 = Equiv(C11)   expect -( ((f(a) = f(a)) & (f(g(X)) = X)) |o| (~(f(a) = f(a)) & ~(f(g(X)) = X)) )
step C13,C14 = Cnf(C12) expect +( f(a) = f(a) ) | +( f(g(X)) = X ) ; -( f(a) = f(a) ) | -( f(g(X)) = X )
step C15 = Res(C13, C2) expect +( f(a) = f(a) ) | -( (f(g(X)) = X) = (f(g(X')) = X') )
step C16 = Dec(C15)     expect +( f(a) = f(a) ) | -( f(g(X)) = f(g(X')) ) | -( X = X' )
step C17 = Solve(C16)   expect +( f(a) = f(a) ) | -( f(g(X')) = f(g(X')) )
step C18 = Triv(C17)    expect +( f(a) = f(a) )
step C19 = Res(C2, C18) expect -( (f(g(X)) = X) = (f(a) = f(a)) )
step C20 = Dec(C19)     expect -( f(g(X)) = f(a) ) | -( X = f(a) )
step C21 = Solve(C20)   expect -( f(g(f(a))) = f(a) )
step C22 = Dec(C21)     expect -( g(f(a)) = a )
step C23 = Res(C22, C1) expect -( (g(f(a)) = a) = (g(f(a)) = a) )
step C24 = Triv(C23)    expect empty
)";

}  // namespace

Problem builtin_problem() { return parse_problem(kBuiltinProblemText, kBuiltinProblemRef); }

std::vector<std::string> builtin_script_keys() { return {"ref1", "ref2"}; }

ProofScript builtin_script(const std::string& key) {
  Problem problem = builtin_problem();
  if (key == "ref1") {
    ProofScript s = parse_script(kRefutation1Text, problem, "builtin ref1");
    return s;
  }
  if (key == "ref2") {
    ProofScript s = parse_script(kRefutation2Text, problem, "builtin ref2");
    return s;
  }
  throw Error("unknown builtin script '" + key + "' (available: ref1, ref2)");
}

BuiltinScripts builtin_scripts() { return BuiltinScripts{builtin_script("ref1"), builtin_script("ref2")}; }

}  // namespace erue
