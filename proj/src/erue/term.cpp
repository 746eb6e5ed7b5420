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

#include "erue/term.hpp"

#include <algorithm>
#include <cctype>

#include "erue/error.hpp"

namespace erue {

namespace {

constexpr const char* kEqName = "=";
constexpr const char* kNotName = "~";
constexpr const char* kAndName = "&";
constexpr const char* kOrName = "|";

bool is_logical_name(const std::string& name) {
  return name == kEqName || name == kNotName || name == kAndName || name == kOrName;
}

}  // namespace

bool is_variable_name(const std::string& name) {
  return !name.empty() && std::isupper(static_cast<unsigned char>(name[0]));
}

struct Term::Node {
  Kind kind;
  std::string name;  // Var/Const name, Lam bound name
  Type type;         // full node type; for Lam, arrow(bound, body type)
  std::shared_ptr<const Node> a, b;  // App: fn/arg; Lam: body in a
};

// --- construction -----------------------------------------------------------

Term Term::var(const std::string& name, Type type) {
  if (!is_variable_name(name))
    throw TypeError("variable name must start with an uppercase letter: '" + name + "'");
  return Term(std::make_shared<const Node>(Node{Kind::Var, name, std::move(type), {}, {}}));
}

Term Term::constant(const std::string& name, Type type) {
  if (name.empty() || is_variable_name(name))
    throw TypeError("constant name must start with a lowercase letter: '" + name + "'");
  if (is_logical_name(name))
    throw TypeError("logical constant '" + name + "' cannot be redeclared");
  return Term(std::make_shared<const Node>(Node{Kind::Const, name, std::move(type), {}, {}}));
}

Term Term::eq_const(Type index) {
  Type ty = Type::arrow(index, Type::arrow(index, Type::o()));
  return Term(std::make_shared<const Node>(Node{Kind::Const, kEqName, std::move(ty), {}, {}}));
}

Term Term::not_const() {
  static const Term t(std::make_shared<const Node>(
      Node{Kind::Const, kNotName, Type::arrow(Type::o(), Type::o()), {}, {}}));
  return t;
}

Term Term::and_const() {
  static const Term t(std::make_shared<const Node>(Node{
      Kind::Const, kAndName, Type::arrow(Type::o(), Type::arrow(Type::o(), Type::o())), {}, {}}));
  return t;
}

Term Term::or_const() {
  static const Term t(std::make_shared<const Node>(Node{
      Kind::Const, kOrName, Type::arrow(Type::o(), Type::arrow(Type::o(), Type::o())), {}, {}}));
  return t;
}

Term Term::app(Term fn, Term arg) {
  Type fnty = fn.type();
  if (!fnty.is_arrow())
    throw TypeError("cannot apply non-function " + fn.show() + " : " + fnty.show());
  if (fnty.domain() != arg.type())
    throw TypeError("ill-typed application: " + fn.show() + " : " + fnty.show() +
                    " applied to " + arg.show() + " : " + arg.type().show());
  Type result = fnty.codomain();
  return Term(std::make_shared<const Node>(
      Node{Kind::App, "", std::move(result), fn.n_, arg.n_}));
}

Term Term::app(Term head, const std::vector<Term>& args) {
  Term t = std::move(head);
  for (const Term& a : args) t = app(t, a);
  return t;
}

Term Term::lam(const std::string& bound, Type bound_type, Term body) {
  if (!is_variable_name(bound))
    throw TypeError("lambda binder must be a variable name: '" + bound + "'");
  Type ty = Type::arrow(bound_type, body.type());
  return Term(std::make_shared<const Node>(Node{Kind::Lam, bound, std::move(ty), body.n_, {}}));
}

Term Term::eq(Term lhs, Term rhs) {
  if (lhs.type() != rhs.type())
    throw TypeError("equation sides differ in type: " + lhs.type().show() + " vs " +
                    rhs.type().show());
  Type index = lhs.type();
  return app(app(eq_const(index), std::move(lhs)), std::move(rhs));
}

Term Term::neg(Term t) { return app(not_const(), std::move(t)); }
Term Term::conj(Term lhs, Term rhs) {
  return app(app(and_const(), std::move(lhs)), std::move(rhs));
}
Term Term::disj(Term lhs, Term rhs) {
  return app(app(or_const(), std::move(lhs)), std::move(rhs));
}

// --- accessors --------------------------------------------------------------

Term::Kind Term::kind() const { return n_->kind; }

const std::string& Term::name() const {
  if (!is_var() && !is_const()) throw TypeError("name() on " + show());
  return n_->name;
}

Type Term::type() const { return n_->type; }

Term Term::fn() const {
  if (!is_app()) throw TypeError("fn() on non-application");
  return Term(n_->a);
}

Term Term::arg() const {
  if (!is_app()) throw TypeError("arg() on non-application");
  return Term(n_->b);
}

const std::string& Term::bound_name() const {
  if (!is_lam()) throw TypeError("bound_name() on non-abstraction");
  return n_->name;
}

Type Term::bound_type() const {
  if (!is_lam()) throw TypeError("bound_type() on non-abstraction");
  return n_->type.domain();
}

Term Term::body() const {
  if (!is_lam()) throw TypeError("body() on non-abstraction");
  return Term(n_->a);
}

Term Term::head() const {
  Term t = *this;
  while (t.is_app()) t = t.fn();
  return t;
}

std::vector<Term> Term::args() const {
  std::vector<Term> out;
  Term t = *this;
  while (t.is_app()) {
    out.push_back(t.arg());
    t = t.fn();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool Term::is_logical_const() const { return is_const() && is_logical_name(n_->name); }
bool Term::is_eq_const() const { return is_const() && n_->name == kEqName; }

bool Term::is_equation() const {
  if (!is_app()) return false;
  Term h = head();
  return h.is_eq_const() && args().size() == 2;
}

Term Term::lhs() const {
  if (!is_equation()) throw TypeError("lhs() on non-equation " + show());
  return fn().arg();
}

Term Term::rhs() const {
  if (!is_equation()) throw TypeError("rhs() on non-equation " + show());
  return arg();
}

bool Term::has_connective_head() const {
  if (!is_app()) return false;
  Term h = head();
  if (!h.is_const()) return false;
  std::size_t n = args().size();
  if (h.name() == kNotName) return n == 1;
  if (h.name() == kAndName || h.name() == kOrName) return n == 2;
  return false;
}

// --- free variables ---------------------------------------------------------

namespace {

void collect_free(const Term& t, std::vector<std::string>& bound,
                  std::map<std::string, Type>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (std::find(bound.rbegin(), bound.rend(), t.name()) == bound.rend())
        out.emplace(t.name(), t.type());
      return;
    case Term::Kind::Const:
      return;
    case Term::Kind::App:
      collect_free(t.fn(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
    case Term::Kind::Lam:
      bound.push_back(t.bound_name());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

std::map<std::string, Type> Term::free_vars() const {
  std::map<std::string, Type> out;
  std::vector<std::string> bound;
  collect_free(*this, bound, out);
  return out;
}

std::set<std::string> Term::free_var_names() const {
  std::set<std::string> out;
  for (const auto& [name, ty] : free_vars()) out.insert(name);
  return out;
}

bool Term::has_free(const std::string& name) const {
  return free_vars().count(name) != 0;
}

std::size_t Term::symbol_count() const {
  switch (kind()) {
    case Kind::Var:
    case Kind::Const:
      return 1;
    case Kind::App:
      return fn().symbol_count() + arg().symbol_count();
    case Kind::Lam:
      return 1 + body().symbol_count();
  }
  return 0;
}

bool Term::is_beta_normal() const {
  switch (kind()) {
    case Kind::Var:
    case Kind::Const:
      return true;
    case Kind::App:
      return !fn().is_lam() && fn().is_beta_normal() && arg().is_beta_normal();
    case Kind::Lam:
      return body().is_beta_normal();
  }
  return true;
}

// --- equality ----------------------------------------------------------------

bool identical(const Term& a, const Term& b) {
  if (a.n_ == b.n_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return a.name() == b.name() && a.type() == b.type();
    case Term::Kind::App:
      return identical(a.fn(), b.fn()) && identical(a.arg(), b.arg());
    case Term::Kind::Lam:
      return a.bound_name() == b.bound_name() && a.bound_type() == b.bound_type() &&
             identical(a.body(), b.body());
  }
  return false;
}

bool alpha_equal_rec(const Term& a, const Term& b, std::vector<std::string>& ba,
                     std::vector<std::string>& bb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: {
      auto ia = std::find(ba.rbegin(), ba.rend(), a.name());
      auto ib = std::find(bb.rbegin(), bb.rend(), b.name());
      bool bound_a = ia != ba.rend();
      bool bound_b = ib != bb.rend();
      if (bound_a != bound_b) return false;
      if (bound_a) return (ia - ba.rbegin()) == (ib - bb.rbegin()) && a.type() == b.type();
      return a.name() == b.name() && a.type() == b.type();
    }
    case Term::Kind::Const:
      return a.name() == b.name() && a.type() == b.type();
    case Term::Kind::App:
      return alpha_equal_rec(a.fn(), b.fn(), ba, bb) && alpha_equal_rec(a.arg(), b.arg(), ba, bb);
    case Term::Kind::Lam: {
      if (a.bound_type() != b.bound_type()) return false;
      ba.push_back(a.bound_name());
      bb.push_back(b.bound_name());
      bool ok = alpha_equal_rec(a.body(), b.body(), ba, bb);
      ba.pop_back();
      bb.pop_back();
      return ok;
    }
  }
  return false;
}

bool alpha_equal(const Term& a, const Term& b) {
  std::vector<std::string> ba, bb;
  return alpha_equal_rec(a, b, ba, bb);
}

// --- substitution and normalization ------------------------------------------

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string stem = base;
  while (stem.size() > 1 && std::isdigit(static_cast<unsigned char>(stem.back())))
    stem.pop_back();
  for (std::size_t k = 1;; ++k) {
    std::string candidate = stem + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

namespace {

// Syntactic capture-avoiding replacement; no reduction.
Term raw_subst(const Term& t, const std::map<std::string, Term>& sigma) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = sigma.find(t.name());
      return it == sigma.end() ? t : it->second;
    }
    case Term::Kind::Const:
      return t;
    case Term::Kind::App:
      return Term::app(raw_subst(t.fn(), sigma), raw_subst(t.arg(), sigma));
    case Term::Kind::Lam: {
      std::map<std::string, Term> inner = sigma;
      inner.erase(t.bound_name());
      if (inner.empty()) return t;
      // Drop bindings for variables the body never mentions; keeps the
      // capture analysis to what can actually happen.
      auto body_free = t.body().free_vars();
      for (auto it = inner.begin(); it != inner.end();)
        it = body_free.count(it->first) ? std::next(it) : inner.erase(it);
      if (inner.empty()) return t;

      bool capture = false;
      std::set<std::string> avoid;
      for (const auto& [from, image] : inner) {
        for (const auto& [fv, ty] : image.free_vars()) {
          avoid.insert(fv);
          if (fv == t.bound_name()) capture = true;
        }
        avoid.insert(from);
      }
      std::string bound = t.bound_name();
      Term body = t.body();
      if (capture) {
        for (const auto& [fv, ty] : body_free) avoid.insert(fv);
        std::string renamed = fresh_name(bound, avoid);
        std::map<std::string, Term> rn;
        rn.emplace(bound, Term::var(renamed, t.bound_type()));
        body = raw_subst(body, rn);
        bound = renamed;
      }
      return Term::lam(bound, t.bound_type(), raw_subst(body, inner));
    }
  }
  return t;
}

}  // namespace

Term beta_normalize(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return t;
    case Term::Kind::Lam: {
      Term body = beta_normalize(t.body());
      if (identical(body, t.body())) return t;
      return Term::lam(t.bound_name(), t.bound_type(), body);
    }
    case Term::Kind::App: {
      Term fn = beta_normalize(t.fn());
      if (fn.is_lam()) {
        std::map<std::string, Term> one;
        one.emplace(fn.bound_name(), t.arg());
        return beta_normalize(raw_subst(fn.body(), one));
      }
      Term arg = beta_normalize(t.arg());
      if (identical(fn, t.fn()) && identical(arg, t.arg())) return t;
      return Term::app(fn, arg);
    }
  }
  return t;
}

Substitution Substitution::single(const Term& var, Term image) {
  Substitution s;
  s.bind(var, std::move(image));
  return s;
}

void Substitution::bind(const Term& var, Term image) {
  if (!var.is_var()) throw TypeError("substitution domain must be variables");
  if (var.type() != image.type())
    throw TypeError("substitution is not type-preserving: " + var.name() + " : " +
                    var.type().show() + " := " + image.show() + " : " + image.type().show());
  map_.insert_or_assign(var.name(), std::move(image));
}

bool Substitution::contains(const std::string& name) const { return map_.count(name) != 0; }

const Term* Substitution::find(const std::string& name) const {
  auto it = map_.find(name);
  return it == map_.end() ? nullptr : &it->second;
}

Term substitute(const Term& t, const Substitution& subst) {
  if (subst.empty()) return beta_normalize(t);
  return beta_normalize(raw_subst(t, subst.mapping()));
}

// --- type re-derivation -------------------------------------------------------

namespace {

Type check_type_rec(const Term& t, std::vector<std::pair<std::string, Type>>& env) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == t.name()) {
          if (it->second != t.type())
            throw TypeError("bound variable '" + t.name() + "' used at type " +
                            t.type().show() + ", bound at " + it->second.show());
          return t.type();
        }
      return t.type();
    }
    case Term::Kind::Const:
      return t.type();
    case Term::Kind::App: {
      Type fnty = check_type_rec(t.fn(), env);
      Type argty = check_type_rec(t.arg(), env);
      if (!fnty.is_arrow())
        throw TypeError("ill-typed application: head " + t.fn().show() + " : " + fnty.show() +
                        " is not a function");
      if (fnty.domain() != argty)
        throw TypeError("ill-typed application: " + t.fn().show() + " expects " +
                        fnty.domain().show() + ", got " + t.arg().show() + " : " + argty.show());
      return fnty.codomain();
    }
    case Term::Kind::Lam: {
      env.emplace_back(t.bound_name(), t.bound_type());
      Type body = check_type_rec(t.body(), env);
      env.pop_back();
      return Type::arrow(t.bound_type(), body);
    }
  }
  throw TypeError("unreachable term kind");
}

}  // namespace

Type check_type(const Term& t) {
  std::vector<std::pair<std::string, Type>> env;
  Type ty = check_type_rec(t, env);
  if (ty != t.type())
    throw TypeError("stored type " + t.type().show() + " disagrees with derived " + ty.show());
  return ty;
}

// --- printing -----------------------------------------------------------------

namespace {

bool is_plain_atom(const Term& t) {
  if (t.is_var() || t.is_const()) return !t.is_logical_const();
  if (t.is_app()) {
    Term h = t.head();
    return (h.is_var() || h.is_const()) && !h.is_logical_const();
  }
  return false;
}

std::string show_rec(const Term& t);

std::string show_args(const std::vector<Term>& args) {
  std::string out = "(";
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k) out += ", ";
    out += show_rec(args[k]);
  }
  return out + ")";
}

bool is_negation(const Term& t) {
  return t.is_app() && t.head().is_const() && t.head().name() == kNotName;
}

// Operand wrappers keep the grammar unambiguous: equations and connectives
// are parenthesized inside each other, lambdas are parenthesized except in
// trailing positions where nothing can follow the body. A bare ~t is fine
// under & and |o| (it binds tighter) but not beside =, where ~p = q would
// read back as ~(p = q).
std::string wrap_operand(const Term& t) {
  if (is_plain_atom(t)) return show_rec(t);
  return "(" + show_rec(t) + ")";
}

std::string wrap_conn_operand(const Term& t) {
  if (is_plain_atom(t) || is_negation(t)) return show_rec(t);
  return "(" + show_rec(t) + ")";
}

std::string wrap_not_arg(const Term& t) {
  if (is_plain_atom(t) || is_negation(t)) return show_rec(t);
  return "(" + show_rec(t) + ")";
}

std::string show_rec(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      if (t.is_logical_const())
        throw TypeError("cannot print partially applied logical constant '" + t.name() + "'");
      return t.name();
    case Term::Kind::Lam:
      return "^" + t.bound_name() + ":" + t.bound_type().show() + ". " + show_rec(t.body());
    case Term::Kind::App: {
      Term h = t.head();
      std::vector<Term> args = t.args();
      if (h.is_const() && h.name() == kEqName) {
        if (args.size() != 2) throw TypeError("cannot print partially applied equality");
        std::string rhs = args[1].is_lam() ? show_rec(args[1]) : wrap_operand(args[1]);
        return wrap_operand(args[0]) + " = " + rhs;
      }
      if (h.is_const() && h.name() == kAndName && args.size() == 2)
        return wrap_conn_operand(args[0]) + " & " + wrap_conn_operand(args[1]);
      if (h.is_const() && h.name() == kOrName && args.size() == 2)
        return wrap_conn_operand(args[0]) + " |o| " + wrap_conn_operand(args[1]);
      if (h.is_const() && h.name() == kNotName && args.size() == 1)
        return "~" + wrap_not_arg(args[0]);
      if (h.is_logical_const())
        throw TypeError("cannot print partially applied logical constant '" + h.name() + "'");
      std::string head = h.is_lam() ? "(" + show_rec(h) + ")" : show_rec(h);
      return head + show_args(args);
    }
  }
  return "?";
}

}  // namespace

std::string Term::show() const { return show_rec(*this); }

}  // namespace erue
