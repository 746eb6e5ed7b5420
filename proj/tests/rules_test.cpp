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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "erue/error.hpp"
#include "erue/parse.hpp"
#include "erue/rules.hpp"

using namespace erue;

namespace {

Signature sig() {
  return Signature{{"a", Type::i()},
                   {"f", Type::arrow(Type::i(), Type::i())},
                   {"g", Type::arrow(Type::i(), Type::i())},
                   {"p", Type::o()},
                   {"q", Type::o()}};
}

Term t(const std::string& text) { return parse_term(text, sig()); }
Clause cl(const std::string& text) { return parse_clause(text, sig()); }

bool veq(const Clause& a, const std::string& b) { return variant_equal(a, cl(b)); }

}  // namespace

TEST_CASE("resolve") {
  Clause c1 = cl("+( g(f(a)) = a )");
  Clause c5 = cl("-( g(X) = H(X) )");
  Clause r = resolve(c1, 0, c5, 0);
  CHECK(veq(r, "-( (g(f(a)) = a) = (g(X) = H(X)) )"));
  CHECK(r.size() == c1.size() + c5.size() - 1);

  // second premise renamed apart: pairing a clause with itself stays sane
  Clause c13 = cl("+( f(a) = f(a) ) | +( f(g(X)) = X )");
  Clause c2 = cl("-( f(g(X)) = X )");
  Clause r15 = resolve(c13, 1, c2, 0);
  CHECK(veq(r15, "+( f(a) = f(a) ) | -( (f(g(X)) = X) = (f(g(X')) = X') )"));

  Clause prop = resolve(cl("+( p )"), 0, cl("-( p )"), 0);
  CHECK(veq(prop, "-( p = p )"));

  CHECK_THROWS_AS(resolve(c1, 0, c13, 0), RuleError);  // same polarity
  CHECK_THROWS_AS(resolve(c1, 3, c2, 0), RuleError);   // index out of range
}

TEST_CASE("decompose") {
  CHECK(veq(decompose(cl("-( f(g(X)) = f(H(X)) )"), 0), "-( g(X) = H(X) )"));

  // equality constants act as rigid binary heads
  Clause c6 = cl("-( (g(f(a)) = a) = (g(X) = H(X)) )");
  CHECK(veq(decompose(c6, 0), "-( g(f(a)) = g(X) ) | -( a = H(X) )"));

  // nullary head: the literal dissolves
  CHECK(decompose(cl("-( a = a )"), 0).empty());

  // other literals are carried unchanged, in place
  Clause c7 = cl("-( g(f(a)) = g(X) ) | -( a = H(X) )");
  CHECK(decompose(c7, 0).show() == "-( f(a) = X ) | -( a = H(X) )");

  CHECK_THROWS_AS(decompose(cl("+( g(f(a)) = a )"), 0), RuleError);      // positive
  CHECK_THROWS_AS(decompose(cl("-( f(a) = g(a) )"), 0), RuleError);      // head clash
  CHECK_THROWS_AS(decompose(cl("-( f(g(X)) = X )"), 0), RuleError);      // flex head
  CHECK_THROWS_AS(decompose(cl("-( p )"), 0), RuleError);                // not an equation
  CHECK_THROWS_AS(decompose(cl("-( (a = a) = p )"), 0), RuleError);      // eq vs prop const
  CHECK_THROWS_AS(decompose(cl("-( (p & q) = (p & q) )"), 0), RuleError);  // connective head

  std::string lh, rh;
  CHECK(dec_status(cl("-( (a = a) = (p = q) )"), 0, &lh, &rh) == DecStatus::TypeIndexClash);
  CHECK(lh == "=:i");
  CHECK(rh == "=:o");
}

TEST_CASE("solve substitution readings") {
  // keep: the solved literal stays, instantiated
  Clause c8 = cl("-( f(a) = X ) | -( a = H(X) )");
  CHECK(solve_subst(c8, 0, true).show() == "-( f(a) = f(a) ) | -( a = H(f(a)) )");

  // drop: the solved literal goes away
  Clause c20 = cl("-( f(g(X)) = f(a) ) | -( X = f(a) )");
  CHECK(solve_subst(c20, 1, false).show() == "-( f(g(f(a))) = f(a) )");

  // instantiation beta-reduces: H := ^Y. a applied to f(a) collapses to a
  Clause c11 = cl("-( a = H(f(a)) ) | -( H = ^Y:i. a )");
  CHECK(solve_subst(c11, 1, false).show() == "-( a = a )");

  // no free occurrence of the solved variable remains
  CHECK(solve_subst(c8, 0, true).free_var_names() == std::set<std::string>{"H"});

  CHECK_THROWS_AS(solve_subst(cl("-( f(g(X)) = X )"), 0, false), RuleError);  // occurs-check
  CHECK_THROWS_AS(solve_subst(cl("-( f(a) = g(a) )"), 0, false), RuleError);  // no variable side
  CHECK_THROWS_AS(solve_subst(cl("+( p )"), 0, false), RuleError);
}

TEST_CASE("solve chain reading") {
  Clause c3 = cl("-( f(g(X)) = X ) | -( X = f(H(X)) )");
  Clause c4 = solve_chain(c3, 0, 1);
  CHECK(c4.show() == "-( f(g(X)) = f(H(X)) )");
  CHECK(c4.size() == c3.size() - 1);

  CHECK(solve_chain(cl("-( a = X ) | -( X = a )"), 0, 1).show() == "-( a = a )");
  CHECK(solve_chain(cl("-( f(a) = X ) | -( X = g(a) )"), 0, 1).show() == "-( f(a) = g(a) )");

  // the shared variable must be the full right side of i and left side of j
  CHECK_THROWS_AS(solve_chain(cl("-( X = a ) | -( X = a )"), 0, 1), RuleError);
  CHECK_THROWS_AS(solve_chain(cl("-( a = X ) | -( Y = a )"), 0, 1), RuleError);
  CHECK_THROWS_AS(solve_chain(c3, 1, 0), RuleError);
}

TEST_CASE("trivial") {
  CHECK(trivial(cl("-( a = a )"), 0).empty());

  Clause c8 = cl("-( f(a) = f(a) ) | -( a = a ) | -( f(g(X)) = X )");
  CHECK(trivial(c8, 1).show() == "-( f(a) = f(a) ) | -( f(g(X)) = X )");
  CHECK(trivial(c8, 1).size() == c8.size() - 1);

  CHECK(trivial(cl("-( (g(f(a)) = a) = (g(f(a)) = a) )"), 0).empty());

  // bound-variable names do not matter
  CHECK(trivial(cl("-( (^Y:i. f(Y)) = (^Z:i. f(Z)) )"), 0).empty());

  CHECK_THROWS_AS(trivial(cl("+( a = a )"), 0), RuleError);
  CHECK_THROWS_AS(trivial(cl("-( f(a) = a )"), 0), RuleError);
}

TEST_CASE("flex rigid") {
  Clause c2 = cl("-( f(g(X)) = X )");
  Clause c3 = flex_rigid(c2, 0, t("f(H(X))"));
  CHECK(c3.show() == "-( f(g(X)) = X ) | -( X = f(H(X)) )");
  CHECK(c3.size() == c2.size() + 1);

  Clause c10 = cl("-( a = H(f(a)) )");
  Clause c11 = flex_rigid(c10, 0, t("^Y:i. a"));
  CHECK(c11.show() == "-( a = H(f(a)) ) | -( H = ^Y:i. a )");

  // zero-argument imitation duplicates the literal shape
  Clause z = cl("-( Z = a )");
  CHECK(flex_rigid(z, 0, t("a")).show() == "-( Z = a ) | -( Z = a )");

  // projection binding
  Clause proj = flex_rigid(c10, 0, t("^Y:i. Y"));
  CHECK(proj.show() == "-( a = H(f(a)) ) | -( H = ^Y:i. Y )");

  CHECK_THROWS_AS(flex_rigid(cl("-( a = a )"), 0, t("a")), RuleError);  // not flex-rigid
  CHECK_THROWS_AS(flex_rigid(c2, 0, t("g(H(X))")), RuleError);          // wrong imitation head
  CHECK_THROWS_AS(flex_rigid(c2, 0, t("a")), RuleError);                // head mismatch
  CHECK_THROWS_AS(flex_rigid(c10, 0, t("a")), RuleError);               // type mismatch
  CHECK_THROWS_AS(flex_rigid(c2, 0, t("f(X)")), RuleError);   // X is not a fresh helper
  CHECK_THROWS_AS(flex_rigid(c2, 0, t("f(H(a))")), RuleError);  // helper arg not a variable
  // helper occurring in the clause is not fresh
  Clause shared = cl("-( f(g(X)) = X ) | -( a = H(X) )");
  CHECK_THROWS_AS(flex_rigid(shared, 0, t("f(H(X))")), RuleError);
}

TEST_CASE("factor") {
  Clause c9 = cl("-( f(a) = f(a) ) | -( f(g(X)) = X )");
  Clause c10 = factor(c9, 0, 1);
  CHECK(c10.show() == "-( f(a) = f(a) ) | -( (f(a) = f(a)) = (f(g(X)) = X) )");
  CHECK(c10.size() == c9.size());

  CHECK(veq(factor(cl("+( p ) | +( p )"), 0, 1), "+( p ) | -( p = p )"));
  CHECK(veq(factor(cl("+( p ) | +( q )"), 0, 1), "+( p ) | -( p = q )"));

  CHECK_THROWS_AS(factor(cl("+( p ) | -( q )"), 0, 1), RuleError);  // polarity mismatch
  CHECK_THROWS_AS(factor(cl("+( p ) | +( q )"), 1, 1), RuleError);  // index collision
}

TEST_CASE("equiv") {
  Clause c3 = cl("-( (g(f(a)) = a) = (f(g(X)) = X) )");
  Clause c4 = equiv(c3, 0);
  CHECK(c4.show() ==
        "-( ((g(f(a)) = a) & (f(g(X)) = X)) |o| (~(g(f(a)) = a) & ~(f(g(X)) = X)) )");
  CHECK(c4.size() == c3.size());

  Clause c11 = cl("-( (f(a) = f(a)) = (f(g(X)) = X) )");
  CHECK(equiv(c11, 0).show() ==
        "-( ((f(a) = f(a)) & (f(g(X)) = X)) |o| (~(f(a) = f(a)) & ~(f(g(X)) = X)) )");

  CHECK(equiv(cl("-( p = q )"), 0).show() == "-( (p & q) |o| (~p & ~q) )");

  CHECK_THROWS_AS(equiv(cl("-( a = a )"), 0), RuleError);  // equation not between propositions
  CHECK_THROWS_AS(equiv(cl("+( p = q )"), 0), RuleError);
  CHECK_THROWS_AS(equiv(cl("-( p )"), 0), RuleError);
}

TEST_CASE("cnf") {
  // the Equiv expansion clausifies into the positive and negative pairs
  Clause c4 = cl("-( ((g(f(a)) = a) & (f(g(X)) = X)) |o| (~(g(f(a)) = a) & ~(f(g(X)) = X)) )");
  std::vector<Clause> closure = cnf_all(c4);
  REQUIRE(closure.size() == 2);
  bool pos_found = false, neg_found = false;
  for (const Clause& c : closure) {
    if (variant_equal(c, cl("+( g(f(a)) = a ) | +( f(g(X)) = X )"))) pos_found = true;
    if (variant_equal(c, cl("-( g(f(a)) = a ) | -( f(g(X)) = X )"))) neg_found = true;
  }
  CHECK(pos_found);
  CHECK(neg_found);

  Clause c12 = cl("-( ((f(a) = f(a)) & (f(g(X)) = X)) |o| (~(f(a) = f(a)) & ~(f(g(X)) = X)) )");
  std::vector<Clause> closure2 = cnf_all(c12);
  REQUIRE(closure2.size() == 2);

  // single negation just flips
  std::vector<Clause> flipped = cnf_step(cl("-( ~p )"), 0);
  REQUIRE(flipped.size() == 1);
  CHECK(flipped[0].show() == "+( p )");

  // step table
  CHECK(cnf_step(cl("+( p & q )"), 0).size() == 2);
  CHECK(cnf_step(cl("-( p & q )"), 0).size() == 1);
  CHECK(cnf_step(cl("-( p & q )"), 0)[0].show() == "-( p ) | -( q )");
  CHECK(cnf_step(cl("+( p |o| q )"), 0).size() == 1);
  CHECK(cnf_step(cl("-( p |o| q )"), 0).size() == 2);

  // closure output is connective-free
  for (const Clause& c : closure)
    for (const Literal& lit : c.literals()) CHECK(!lit.atom().has_connective_head());

  CHECK_THROWS_AS(cnf_step(cl("-( p = q )"), 0), RuleError);  // no top connective
}

TEST_CASE("rule congruence under renaming") {
  // applying a rule to a renamed premise gives the renamed result
  std::map<std::string, std::string> rho{{"X", "U"}, {"H", "K"}};
  Clause c8 = cl("-( f(a) = X ) | -( a = H(X) )");
  CHECK(variant_equal(solve_subst(rename_free_vars(c8, rho), 0, true),
                      rename_free_vars(solve_subst(c8, 0, true), rho)));

  Clause c4 = cl("-( f(g(X)) = f(H(X)) )");
  CHECK(variant_equal(decompose(rename_free_vars(c4, rho), 0),
                      rename_free_vars(decompose(c4, 0), rho)));

  Clause c1 = cl("+( g(f(a)) = a )");
  Clause c5 = cl("-( g(X) = H(X) )");
  CHECK(variant_equal(resolve(c1, 0, rename_free_vars(c5, rho), 0),
                      rename_free_vars(resolve(c1, 0, c5, 0), rho)));
}

TEST_CASE("binding enumeration") {
  Clause c2 = cl("-( f(g(X)) = X )");
  std::vector<Term> bindings = enumerate_bindings(c2, 0, 1);
  // imitation with and without the literal's free variable as helper argument
  bool plain = false, applied = false;
  for (const Term& b : bindings) {
    if (alpha_equal(b, t("f(H1)"))) plain = true;
    if (alpha_equal(b, t("f(H1(X))"))) applied = true;
  }
  CHECK(plain);
  CHECK(applied);
  for (const Term& b : bindings) CHECK_NOTHROW(flex_rigid(c2, 0, b));

  // flexible applied head: imitation of a nullary rigid head plus projection
  Clause c10 = cl("-( a = H(f(a)) )");
  std::vector<Term> b10 = enumerate_bindings(c10, 0, 1);
  bool imit = false, proj = false;
  for (const Term& b : b10) {
    if (alpha_equal(b, t("^Y:i. a"))) imit = true;
    if (alpha_equal(b, t("^Y:i. Y"))) proj = true;
  }
  CHECK(imit);
  CHECK(proj);
  for (const Term& b : b10) CHECK_NOTHROW(flex_rigid(c10, 0, b));

  // depth 2 nests clause constants inside binding arguments
  std::vector<Term> deep = enumerate_bindings(c2, 0, 2);
  bool nested = false;
  for (const Term& b : deep)
    if (alpha_equal(b, t("f(g(H1(X)))")) || alpha_equal(b, t("f(g(H1))"))) nested = true;
  CHECK(nested);
  for (const Term& b : deep) CHECK_NOTHROW(flex_rigid(c2, 0, b));

  CHECK(enumerate_bindings(cl("-( a = a )"), 0, 1).empty());
}

TEST_CASE("hint instantiation") {
  Clause c2 = cl("-( f(g(X1)) = X1 )");
  auto info = flex_rigid_kind(c2, 0);
  REQUIRE(info.has_value());
  auto b = instantiate_hint("X", t("f(H(X))"), info->flex_var, c2);
  REQUIRE(b.has_value());
  CHECK(alpha_equal(*b, t("f(H(X1))")));
  CHECK_NOTHROW(flex_rigid(c2, 0, *b));

  // type-mismatched hints do not apply
  Clause prop = cl("-( P = (p & q) )");
  auto pinfo = flex_rigid_kind(prop, 0);
  REQUIRE(pinfo.has_value());
  CHECK(!instantiate_hint("X", t("f(H(X))"), pinfo->flex_var, prop).has_value());
}

TEST_CASE("literal count deltas") {
  Clause c3 = cl("-( f(g(X)) = X ) | -( X = f(H(X)) )");
  CHECK(solve_chain(c3, 0, 1).size() == c3.size() - 1);
  CHECK(flex_rigid(cl("-( f(g(X)) = X )"), 0, t("f(H(X))")).size() == 2);
  Clause c9 = cl("-( f(a) = f(a) ) | -( f(g(X)) = X )");
  CHECK(factor(c9, 0, 1).size() == c9.size());
  CHECK(trivial(c9, 0).size() == c9.size() - 1);
  Clause c3r = cl("-( (g(f(a)) = a) = (f(g(X)) = X) )");
  CHECK(equiv(c3r, 0).size() == c3r.size());
}
