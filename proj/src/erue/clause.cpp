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

#include "erue/clause.hpp"

#include <algorithm>

#include "erue/error.hpp"

namespace erue {

Literal::Literal(Term atom, bool positive)
    : atom_(beta_normalize(atom)), positive_(positive) {
  if (!atom_.type().is_o())
    throw TypeError("literal atom must have type o, got " + atom_.type().show() + " for " +
                    atom_.show());
}

std::string Literal::show() const {
  return std::string(positive_ ? "+" : "-") + "( " + atom_.show() + " )";
}

Clause::Clause(std::string id, std::vector<Literal> literals)
    : id_(std::move(id)), literals_(std::move(literals)) {
  // Clause-scoped variables: one name, one type, across all literals.
  std::map<std::string, Type> seen;
  for (const Literal& lit : literals_) {
    for (const auto& [name, ty] : lit.atom().free_vars()) {
      auto [it, inserted] = seen.emplace(name, ty);
      if (!inserted && it->second != ty)
        throw TypeError("variable '" + name + "' used at both " + it->second.show() + " and " +
                        ty.show() + " within one clause");
    }
  }
}

Clause Clause::with_id(std::string id) const {
  Clause c = *this;
  c.id_ = std::move(id);
  return c;
}

std::map<std::string, Type> Clause::free_vars() const {
  std::map<std::string, Type> out;
  for (const Literal& lit : literals_)
    for (const auto& [name, ty] : lit.atom().free_vars()) out.emplace(name, ty);
  return out;
}

std::set<std::string> Clause::free_var_names() const {
  std::set<std::string> out;
  for (const auto& [name, ty] : free_vars()) out.insert(name);
  return out;
}

std::size_t Clause::weight() const {
  std::size_t w = 0;
  for (const Literal& lit : literals_) w += lit.symbol_count();
  return w;
}

std::string Clause::show() const {
  if (literals_.empty()) return "[]";
  std::string out;
  for (std::size_t k = 0; k < literals_.size(); ++k) {
    if (k) out += " | ";
    out += literals_[k].show();
  }
  return out;
}

// --- variant equality --------------------------------------------------------

namespace {

struct VarBijection {
  std::map<std::string, std::string> fwd, rev;
};

// Alpha comparison that grows a free-variable bijection as it goes.
bool atoms_variant(const Term& a, const Term& b, VarBijection& bij,
                   std::vector<std::string>& ba, std::vector<std::string>& bb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: {
      auto ia = std::find(ba.rbegin(), ba.rend(), a.name());
      auto ib = std::find(bb.rbegin(), bb.rend(), b.name());
      bool bound_a = ia != ba.rend();
      bool bound_b = ib != bb.rend();
      if (bound_a != bound_b) return false;
      if (bound_a) return (ia - ba.rbegin()) == (ib - bb.rbegin()) && a.type() == b.type();
      if (a.type() != b.type()) return false;
      auto f = bij.fwd.find(a.name());
      if (f != bij.fwd.end()) return f->second == b.name();
      if (bij.rev.count(b.name())) return false;  // keep it injective
      bij.fwd.emplace(a.name(), b.name());
      bij.rev.emplace(b.name(), a.name());
      return true;
    }
    case Term::Kind::Const:
      return a.name() == b.name() && a.type() == b.type();
    case Term::Kind::App:
      return atoms_variant(a.fn(), b.fn(), bij, ba, bb) &&
             atoms_variant(a.arg(), b.arg(), bij, ba, bb);
    case Term::Kind::Lam: {
      if (a.bound_type() != b.bound_type()) return false;
      ba.push_back(a.bound_name());
      bb.push_back(b.bound_name());
      bool ok = atoms_variant(a.body(), b.body(), bij, ba, bb);
      ba.pop_back();
      bb.pop_back();
      return ok;
    }
  }
  return false;
}

bool match_literals(const Clause& a, const Clause& b, std::size_t i, std::vector<bool>& used,
                    VarBijection& bij) {
  if (i == a.size()) return true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used[j] || a[i].positive() != b[j].positive()) continue;
    VarBijection saved = bij;
    std::vector<std::string> ba, bb;
    if (atoms_variant(a[i].atom(), b[j].atom(), bij, ba, bb)) {
      used[j] = true;
      if (match_literals(a, b, i + 1, used, bij)) return true;
      used[j] = false;
    }
    bij = saved;
  }
  return false;
}

}  // namespace

bool variant_equal(const Clause& a, const Clause& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  VarBijection bij;
  return match_literals(a, b, 0, used, bij);
}

// --- renaming -----------------------------------------------------------------

Clause rename_free_vars(const Clause& c, const std::map<std::string, std::string>& renaming) {
  if (renaming.empty()) return c;
  auto types = c.free_vars();
  Substitution subst;
  for (const auto& [from, to] : renaming) {
    auto it = types.find(from);
    if (it == types.end()) continue;
    subst.bind(Term::var(from, it->second), Term::var(to, it->second));
  }
  std::vector<Literal> lits;
  lits.reserve(c.size());
  for (const Literal& lit : c.literals())
    lits.emplace_back(substitute(lit.atom(), subst), lit.positive());
  return Clause(c.id(), std::move(lits));
}

Clause rename_apart(const Clause& c, const std::set<std::string>& avoid,
                    std::map<std::string, std::string>& renaming_out) {
  renaming_out.clear();
  auto fvs = c.free_vars();
  std::set<std::string> taken = avoid;
  for (const auto& [name, ty] : fvs) taken.insert(name);
  for (const auto& [name, ty] : fvs) {
    if (!avoid.count(name)) continue;
    std::string renamed = fresh_name(name, taken);
    taken.insert(renamed);
    renaming_out.emplace(name, renamed);
  }
  return rename_free_vars(c, renaming_out);
}

Clause rename_apart(const Clause& c, const std::set<std::string>& avoid) {
  std::map<std::string, std::string> renaming;
  return rename_apart(c, avoid, renaming);
}

// --- fingerprint ---------------------------------------------------------------

namespace {

void shape_rec(const Term& t, std::vector<std::string>& bound, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = std::find(bound.rbegin(), bound.rend(), t.name());
      if (it == bound.rend())
        out += "_";
      else
        out += "^" + std::to_string(it - bound.rbegin());
      return;
    }
    case Term::Kind::Const:
      out += t.name();
      return;
    case Term::Kind::App:
      out += "(";
      shape_rec(t.fn(), bound, out);
      out += " ";
      shape_rec(t.arg(), bound, out);
      out += ")";
      return;
    case Term::Kind::Lam:
      out += "L.";
      bound.push_back(t.bound_name());
      shape_rec(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

std::string variant_signature(const Clause& c) {
  std::vector<std::string> parts;
  parts.reserve(c.size());
  for (const Literal& lit : c.literals()) {
    std::string s = lit.positive() ? "+" : "-";
    std::vector<std::string> bound;
    shape_rec(lit.atom(), bound, s);
    parts.push_back(std::move(s));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const std::string& p : parts) {
    out += p;
    out += "|";
  }
  return out;
}

const Clause* Problem::find(const std::string& id) const {
  for (const Clause& c : clauses)
    if (c.id() == id) return &c;
  return nullptr;
}

}  // namespace erue
