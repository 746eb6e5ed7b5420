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

#include "erue/clause.hpp"
#include "erue/error.hpp"
#include "erue/parse.hpp"
#include "erue/term.hpp"

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

}  // namespace

TEST_CASE("types are structural") {
  Type ii = Type::arrow(Type::i(), Type::i());
  CHECK(ii == Type::arrow(Type::i(), Type::i()));
  CHECK(ii != Type::i());
  CHECK(ii.show() == "i>i");
  CHECK(Type::arrow(ii, Type::o()).show() == "(i>i)>o");
  // Right-associative surface syntax round-trips.
  Type iio = Type::arrow(Type::i(), Type::arrow(Type::i(), Type::o()));
  CHECK(iio.show() == "i>i>o");
  CHECK(iio.arity() == 2);
  CHECK(iio.result().is_o());
}

TEST_CASE("typing of terms") {
  CHECK(t("g(f(a))").type().is_i());
  CHECK(t("^Y:i. a").type() == Type::arrow(Type::i(), Type::i()));
  CHECK(t("g(f(a)) = a").type().is_o());

  Term a = Term::constant("a", Type::i());
  CHECK_THROWS_AS(Term::app(a, a), TypeError);  // i is not an arrow
  CHECK_THROWS_AS(Term::app(t("f"), t("p")), TypeError);
  CHECK_THROWS_AS(Term::eq(t("a"), t("p")), TypeError);
  CHECK_THROWS_AS(Term::var("x", Type::i()), TypeError);
  CHECK_THROWS_AS(Term::constant("A", Type::i()), TypeError);

  CHECK(check_type(t("(g(f(a)) = a) = (f(g(X)) = X)")).is_o());
}

TEST_CASE("beta normalization") {
  Term redex = Term::app(t("^Y:i. a"), t("f(a)"));
  CHECK(!redex.is_beta_normal());
  CHECK(identical(beta_normalize(redex), t("a")));

  CHECK(identical(beta_normalize(t("a")), t("a")));

  Term redex2 = Term::app(t("^Y:i. f(Y)"), t("g(a)"));
  CHECK(identical(beta_normalize(redex2), t("f(g(a))")));

  // Normalizing twice is identity, not merely alpha-equality.
  Term inner = Term::lam("Z", Type::i(), Term::app(t("^Y:i. f(Y)"), Term::var("Z", Type::i())));
  Term once = beta_normalize(inner);
  CHECK(identical(beta_normalize(once), once));
  CHECK(check_type(once) == inner.type());
}

TEST_CASE("substitution") {
  Substitution xa = Substitution::single(Term::var("X", Type::i()), t("f(a)"));
  CHECK(identical(substitute(t("f(g(X))"), xa), t("f(g(f(a)))")));
  CHECK(identical(substitute(t("a"), xa), t("a")));

  Substitution h = Substitution::single(Term::var("H", Type::arrow(Type::i(), Type::i())),
                                        t("^Y:i. a"));
  CHECK(identical(substitute(t("H(f(a))"), h), t("a")));

  CHECK(alpha_equal(substitute(t("f(g(X))"), Substitution{}), t("f(g(X))")));

  // capture avoidance: [X := Y] under a binder for Y renames the binder
  Substitution xy = Substitution::single(Term::var("X", Type::i()), Term::var("Y", Type::i()));
  Term lam = t("^Y:i. f(X)");
  Term res = substitute(lam, xy);
  CHECK(alpha_equal(res, t("^Z:i. f(Y)")));
  CHECK(!alpha_equal(res, t("^Y:i. f(Y)")));

  CHECK_THROWS_AS(Substitution::single(Term::var("X", Type::i()), t("p")), TypeError);
}

TEST_CASE("alpha equality") {
  CHECK(alpha_equal(t("^Y:i. a"), t("^Z:i. a")));
  CHECK(alpha_equal(t("f(a)"), t("f(a)")));
  CHECK(!alpha_equal(t("X"), t("X'")));  // free names are significant
  CHECK(!alpha_equal(t("^Y:i. Y"), t("^Y:i. a")));
  // congruence under application and abstraction
  Term l1 = Term::lam("U", Type::i(), t("g(a)"));
  Term l2 = Term::lam("V", Type::i(), t("g(a)"));
  CHECK(alpha_equal(Term::app(l1, t("a")), Term::app(l2, t("a"))));
  CHECK(alpha_equal(Term::lam("W", Type::i(), l1), Term::lam("W", Type::i(), l2)));
}

TEST_CASE("literals and clauses") {
  CHECK_THROWS_AS(Literal(t("f(a)"), true), TypeError);  // atom must be o-typed
  Literal lit(Term::app(t("^Y:i. a = a"), t("f(a)")), false);
  CHECK(identical(lit.atom(), t("a = a")));  // normalized on construction

  Clause c = cl("-( f(a) = X ) | -( a = H(X) )");
  CHECK(c.size() == 2);
  CHECK(c.free_var_names() == std::set<std::string>{"X", "H"});
  CHECK(cl("empty").empty());
  CHECK(cl("empty").show() == "[]");

  // clause-scoped variables must agree in type across literals
  std::vector<Literal> bad{Literal(t("X = a"), false),
                           Literal(Term::eq(Term::var("X", Type::o()), t("p")), false)};
  CHECK_THROWS_AS(Clause("B", std::move(bad)), TypeError);
}

TEST_CASE("variant equality") {
  CHECK(variant_equal(cl("-( g(X) = H(X) )"), cl("-( g(Z) = K(Z) )")));
  CHECK(variant_equal(cl("-( p ) | -( q )"), cl("-( q ) | -( p )")));
  CHECK(!variant_equal(cl("-( a = a )"), cl("+( a = a )")));

  // renaming must be bijective: X,Y cannot both map to Z
  CHECK(!variant_equal(cl("-( f(X) = Y )"), cl("-( f(Z) = Z )")));
  CHECK(!variant_equal(cl("-( f(X) = X )"), cl("-( f(Z) = W )")));
  // ... and consistent across literals
  CHECK(variant_equal(cl("-( f(X) = a ) | -( g(X) = a )"), cl("-( f(U) = a ) | -( g(U) = a )")));
  CHECK(!variant_equal(cl("-( f(X) = a ) | -( g(X) = a )"), cl("-( f(U) = a ) | -( g(V) = a )")));

  // equivalence relation spot checks
  Clause a = cl("-( g(X) = H(X) )");
  Clause b = cl("-( g(Z) = K(Z) )");
  Clause c = cl("-( g(W) = M(W) )");
  CHECK(variant_equal(a, a));
  CHECK(variant_equal(b, a));
  CHECK((variant_equal(a, b) && variant_equal(b, c) && variant_equal(a, c)));
}

TEST_CASE("rename apart") {
  Clause c2 = cl("-( f(g(X)) = X )");
  std::map<std::string, std::string> renaming;
  Clause r = rename_apart(c2, {"X"}, renaming);
  CHECK(variant_equal(r, c2));
  CHECK(renaming.size() == 1);
  CHECK(r.free_var_names().count("X") == 0);

  Clause ground = cl("+( g(f(a)) = a )");
  CHECK(rename_apart(ground, {"X"}).show() == ground.show());

  Clause two = cl("-( f(X) = Y ) | -( g(Y) = X )");
  std::map<std::string, std::string> ren2;
  Clause r2 = rename_apart(two, {"X", "Y"}, ren2);
  CHECK(ren2.size() == 2);
  CHECK(variant_equal(r2, two));
  std::set<std::string> fresh = r2.free_var_names();
  CHECK(fresh.count("X") == 0);
  CHECK(fresh.count("Y") == 0);
  // applying the recorded renaming backwards restores the clause
  std::map<std::string, std::string> back;
  for (const auto& [from, to] : ren2) back.emplace(to, from);
  CHECK(rename_free_vars(r2, back).show() == two.show());
}

TEST_CASE("problem parsing") {
  Problem p =
      parse_problem(read_file(std::string(ERUE_SOURCE_DIR) + "/problems/counterexample.erp"));
  CHECK(p.clauses.size() == 2);
  CHECK(p.signature.size() == 3);
  REQUIRE(p.find("C1") != nullptr);
  CHECK(p.find("C1")->show() == "+( g(f(a)) = a )");
  CHECK(p.find("C2")->show() == "-( f(g(X)) = X )");

  CHECK_THROWS_AS(parse_problem("const a : i.\nconst a : i.\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("clause C1 : +( b ).\n"), ParseError);  // unknown constant
  CHECK_THROWS_AS(parse_problem("const a : i.\nclause C1 : +( a ).\n"), ParseError);  // not o
  CHECK_THROWS_AS(parse_problem("const a : i.\nclause C1 : -( X = Y ).\n"),
                  ParseError);  // uninferable variable types
  CHECK_THROWS_AS(parse_problem("frobnicate.\n"), ParseError);
}

TEST_CASE("term printing round-trips") {
  for (const char* text : {
           "g(f(a))",
           "f(g(X)) = X",
           "(g(f(a)) = a) = (g(X) = H(X))",
           "((g(f(a)) = a) & (f(g(X)) = X)) |o| (~(g(f(a)) = a) & ~(f(g(X)) = X))",
           "H = ^Y:i. a",
           "~p",
           "~~p",
           "p & (q |o| p)",
           "(p |o| q) & ~q",
           "H(f(a), a)",
       }) {
    Term parsed = t(text);
    Term reparsed = parse_term(parsed.show(), sig());
    CAPTURE(text);
    CAPTURE(parsed.show());
    CHECK(identical(parsed, reparsed));
  }
  // lambda on the left of an equation needs parentheses and gets them
  Term lam_eq = Term::eq(t("^Y:i. a"), t("^Z:i. a"));
  CHECK(identical(parse_term(lam_eq.show(), sig()), lam_eq));
}

TEST_CASE("fresh names") {
  CHECK(fresh_name("X", {"X"}) == "X1");
  CHECK(fresh_name("X1", {"X1"}) == "X2");  // digits stripped before numbering
  CHECK(fresh_name("H", {"H1", "H2"}) == "H3");
  CHECK(is_variable_name(fresh_name("Foo", {})));
}
