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

#ifndef ERUE_TERM_HPP
#define ERUE_TERM_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "erue/types.hpp"

namespace erue {

// User-declared constants. The logical constants =, ~, &, | are implicit in
// every signature; their names are symbolic, so declared (alphanumeric)
// constants can never shadow them.
using Signature = std::map<std::string, Type>;

// Simply-typed lambda terms. Immutable with shared subtrees. A name starting
// with an uppercase letter is a variable, anything else is a constant.
// Construction enforces well-typedness; it does not force beta-normal form
// (redexes are legal Term values so that normalization has something to do),
// but every term stored inside a Literal is normalized.
class Term {
 public:
  enum class Kind { Var, Const, App, Lam };

  static Term var(const std::string& name, Type type);
  static Term constant(const std::string& name, Type type);
  static Term app(Term fn, Term arg);
  static Term app(Term head, const std::vector<Term>& args);
  static Term lam(const std::string& bound, Type bound_type, Term body);

  // Logical constants. Equality is a family indexed by the operand type.
  static Term eq_const(Type index);
  static Term not_const();
  static Term and_const();
  static Term or_const();

  static Term eq(Term lhs, Term rhs);
  static Term neg(Term t);
  static Term conj(Term lhs, Term rhs);
  static Term disj(Term lhs, Term rhs);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_lam() const { return kind() == Kind::Lam; }

  const std::string& name() const;  // Var, Const
  Type type() const;

  Term fn() const;   // App
  Term arg() const;  // App

  const std::string& bound_name() const;  // Lam
  Type bound_type() const;                // Lam
  Term body() const;                      // Lam

  // Application spine: head applied to args left to right.
  Term head() const;
  std::vector<Term> args() const;

  bool is_logical_const() const;
  bool is_eq_const() const;
  // Equation at any type: eq_t applied to exactly two arguments.
  bool is_equation() const;
  Term lhs() const;
  Term rhs() const;
  // Top connective &, |, ~ fully applied (candidates for cnf steps).
  bool has_connective_head() const;

  std::map<std::string, Type> free_vars() const;
  std::set<std::string> free_var_names() const;
  bool has_free(const std::string& name) const;

  // Number of Var/Const/Lam nodes; the clause weight is built from this.
  std::size_t symbol_count() const;
  bool is_beta_normal() const;

  std::string show() const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;

  friend bool identical(const Term& a, const Term& b);
  friend bool alpha_equal_rec(const Term& a, const Term& b, std::vector<std::string>& ba,
                              std::vector<std::string>& bb);
};

// Structural equality including bound-variable names.
bool identical(const Term& a, const Term& b);

// Equality up to consistent renaming of bound variables; free names count.
bool alpha_equal(const Term& a, const Term& b);

// Beta-normal form. Simply-typed terms strongly normalize, so this always
// terminates; normalizing a normal term returns it unchanged.
Term beta_normalize(const Term& t);

// Re-derives the type bottom-up, diagnosing the first ill-typed subterm.
// Construction already maintains types, so this is the independent check.
Type check_type(const Term& t);

// Type-preserving finite map from variables to terms.
class Substitution {
 public:
  Substitution() = default;
  static Substitution single(const Term& var, Term image);

  void bind(const Term& var, Term image);  // var must be a Var of image's type
  bool contains(const std::string& name) const;
  const Term* find(const std::string& name) const;
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<std::string, Term>& mapping() const { return map_; }

 private:
  std::map<std::string, Term> map_;
};

// Capture-avoiding simultaneous substitution followed by beta-normalization.
Term substitute(const Term& t, const Substitution& subst);

// base with trailing digits stripped, then the first base1, base2, ... not in
// `avoid`. Keeps the leading letter, so variables stay variables.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

bool is_variable_name(const std::string& name);

}  // namespace erue

#endif  // ERUE_TERM_HPP
