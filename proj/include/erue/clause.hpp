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

#ifndef ERUE_CLAUSE_HPP
#define ERUE_CLAUSE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "erue/term.hpp"

namespace erue {

// A proposition-typed atom with a polarity. The atom is normalized on
// construction, so everything stored in clauses is beta-normal.
class Literal {
 public:
  Literal(Term atom, bool positive);

  const Term& atom() const { return atom_; }
  bool positive() const { return positive_; }
  bool negative() const { return !positive_; }

  bool is_equation() const { return atom_.is_equation(); }
  Term lhs() const { return atom_.lhs(); }
  Term rhs() const { return atom_.rhs(); }

  std::size_t symbol_count() const { return atom_.symbol_count(); }
  std::string show() const;

 private:
  Term atom_;
  bool positive_;
};

// A multiset of literals with clause-scoped free variables: the same name in
// two clauses denotes different variables. Duplicates are allowed (factoring
// exists to merge them); the empty multiset is the empty clause [].
class Clause {
 public:
  Clause() = default;
  Clause(std::string id, std::vector<Literal> literals);

  const std::string& id() const { return id_; }
  Clause with_id(std::string id) const;

  bool empty() const { return literals_.empty(); }
  std::size_t size() const { return literals_.size(); }
  const Literal& operator[](std::size_t i) const { return literals_[i]; }
  const std::vector<Literal>& literals() const { return literals_; }

  std::map<std::string, Type> free_vars() const;
  std::set<std::string> free_var_names() const;
  std::size_t weight() const;

  std::string show() const;  // "[]" when empty

 private:
  std::string id_;
  std::vector<Literal> literals_;
};

// True iff some bijective renaming of free variables and some bijection
// between the literal multisets make corresponding atoms alpha-equal with
// equal polarity.
bool variant_equal(const Clause& a, const Clause& b);

// Variant of c whose free variables avoid `avoid`; only colliding names are
// renamed, consistently across the clause.
Clause rename_apart(const Clause& c, const std::set<std::string>& avoid);
Clause rename_apart(const Clause& c, const std::set<std::string>& avoid,
                    std::map<std::string, std::string>& renaming_out);

// Applies a (bijective) free-variable renaming.
Clause rename_free_vars(const Clause& c, const std::map<std::string, std::string>& renaming);

// Renaming-invariant fingerprint used for duplicate buckets: clauses that are
// variants always share it, unrelated clauses rarely do.
std::string variant_signature(const Clause& c);

// A parsed problem file: a signature plus input clauses in file order.
struct Problem {
  Signature signature;
  std::vector<Clause> clauses;
  std::string source;  // label for reports

  const Clause* find(const std::string& id) const;
};

}  // namespace erue

#endif  // ERUE_CLAUSE_HPP
