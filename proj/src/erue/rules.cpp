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

#include "erue/rules.hpp"

#include <algorithm>

#include "erue/error.hpp"

namespace erue {

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::Res: return "Res";
    case Rule::Dec: return "Dec";
    case Rule::Solve: return "Solve";
    case Rule::Triv: return "Triv";
    case Rule::FlexRig: return "FlexRig";
    case Rule::Fac: return "Fac";
    case Rule::Equiv: return "Equiv";
    case Rule::Cnf: return "Cnf";
  }
  return "?";
}

std::optional<Rule> rule_from_name(const std::string& name) {
  if (name == "Res") return Rule::Res;
  if (name == "Dec") return Rule::Dec;
  if (name == "Solve") return Rule::Solve;
  if (name == "Triv") return Rule::Triv;
  if (name == "FlexRig") return Rule::FlexRig;
  if (name == "Fac") return Rule::Fac;
  if (name == "Equiv") return Rule::Equiv;
  if (name == "Cnf") return Rule::Cnf;
  return std::nullopt;
}

std::string solve_mode_name(SolveMode m) {
  switch (m) {
    case SolveMode::SubstDrop: return "subst-drop";
    case SolveMode::SubstKeep: return "subst-keep";
    case SolveMode::Chain: return "chain";
  }
  return "?";
}

namespace {

void check_index(const Clause& c, std::size_t i) {
  if (i >= c.size())
    throw RuleError("literal index " + std::to_string(i + 1) + " out of range for " + c.show());
}

Clause with_replacement(const Clause& c, std::size_t i, std::vector<Literal> replacement) {
  std::vector<Literal> lits;
  lits.reserve(c.size() - 1 + replacement.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k == i)
      for (Literal& l : replacement) lits.push_back(std::move(l));
    else
      lits.push_back(c[k]);
  }
  return Clause("", std::move(lits));
}

// Head of a side once its lambda prefix is stripped, with the prefix names.
Term head_under_prefix(const Term& side, std::vector<std::string>* prefix = nullptr) {
  Term t = side;
  while (t.is_lam()) {
    if (prefix) prefix->push_back(t.bound_name());
    t = t.body();
  }
  return t.head();
}

bool is_free_var_head(const Term& side) {
  std::vector<std::string> prefix;
  Term h = head_under_prefix(side, &prefix);
  return h.is_var() && std::find(prefix.begin(), prefix.end(), h.name()) == prefix.end();
}

}  // namespace

// --- Res ----------------------------------------------------------------------

Clause resolve(const Clause& c, std::size_t i, const Clause& d, std::size_t j) {
  check_index(c, i);
  check_index(d, j);
  if (c[i].positive() == d[j].positive())
    throw RuleError("resolved literals must have opposite polarities");

  std::set<std::string> avoid = c.free_var_names();
  for (const std::string& v : d.free_var_names()) avoid.insert(v);
  Clause dr = rename_apart(d, avoid);

  Literal constraint(Term::eq(c[i].atom(), dr[j].atom()), false);
  std::vector<Literal> lits;
  lits.reserve(c.size() + dr.size() - 1);
  for (std::size_t k = 0; k < c.size(); ++k)
    lits.push_back(k == i ? constraint : c[k]);
  for (std::size_t k = 0; k < dr.size(); ++k)
    if (k != j) lits.push_back(dr[k]);
  return Clause("", std::move(lits));
}

// --- Dec ----------------------------------------------------------------------

namespace {

// Heads in diagnostics: equality constants carry their type index, so a
// clash between =(i) and =(o) reads as what it is.
std::string head_label(const Term& h) {
  if (h.is_eq_const()) return "=:" + h.type().domain().show();
  return h.name();
}

}  // namespace

DecStatus dec_status(const Clause& c, std::size_t i, std::string* left_head,
                     std::string* right_head) {
  check_index(c, i);
  const Literal& lit = c[i];
  if (lit.positive()) return DecStatus::Positive;
  if (!lit.is_equation()) return DecStatus::NotEquation;
  Term l = lit.lhs(), r = lit.rhs();
  if (l.is_lam() || r.is_lam()) return DecStatus::AbstractionSide;
  Term lh = l.head(), rh = r.head();
  if (lh.is_var() || rh.is_var()) return DecStatus::FlexHead;
  if (left_head) *left_head = head_label(lh);
  if (right_head) *right_head = head_label(rh);
  bool l_conn = lh.is_logical_const() && !lh.is_eq_const();
  bool r_conn = rh.is_logical_const() && !rh.is_eq_const();
  if (l_conn || r_conn) return DecStatus::ConnectiveHead;
  if (lh.name() != rh.name()) return DecStatus::HeadClash;
  if (lh.type() != rh.type())
    return lh.is_eq_const() ? DecStatus::TypeIndexClash : DecStatus::HeadClash;
  if (l.args().size() != r.args().size()) return DecStatus::ArityMismatch;
  return DecStatus::Applicable;
}

Clause decompose(const Clause& c, std::size_t i) {
  std::string lh, rh;
  switch (dec_status(c, i, &lh, &rh)) {
    case DecStatus::Applicable:
      break;
    case DecStatus::Positive:
      throw RuleError("Dec needs a negative literal");
    case DecStatus::NotEquation:
      throw RuleError("Dec needs an equation literal");
    case DecStatus::AbstractionSide:
      throw RuleError("Dec does not apply under abstractions");
    case DecStatus::FlexHead:
      throw RuleError("Dec needs rigid heads, found a variable head");
    case DecStatus::ConnectiveHead:
      throw RuleError("Dec does not decompose connective heads");
    case DecStatus::HeadClash:
      throw RuleError("Dec head clash: " + lh + " vs " + rh);
    case DecStatus::TypeIndexClash:
      throw RuleError("Dec equality heads differ in type index");
    case DecStatus::ArityMismatch:
      throw RuleError("Dec arity mismatch");
  }
  std::vector<Term> largs = c[i].lhs().args();
  std::vector<Term> rargs = c[i].rhs().args();
  std::vector<Literal> replacement;
  replacement.reserve(largs.size());
  for (std::size_t k = 0; k < largs.size(); ++k)
    replacement.emplace_back(Term::eq(largs[k], rargs[k]), false);
  return with_replacement(c, i, std::move(replacement));
}

// --- Solve --------------------------------------------------------------------

std::optional<SolveBinding> solve_binding(const Clause& c, std::size_t i) {
  check_index(c, i);
  const Literal& lit = c[i];
  if (lit.positive() || !lit.is_equation()) return std::nullopt;
  Term l = lit.lhs(), r = lit.rhs();
  if (l.is_var() && !r.has_free(l.name())) return SolveBinding{l, r};
  if (r.is_var() && !l.has_free(r.name())) return SolveBinding{r, l};
  return std::nullopt;
}

Clause solve_subst(const Clause& c, std::size_t i, bool keep) {
  check_index(c, i);
  const Literal& lit = c[i];
  if (lit.positive() || !lit.is_equation())
    throw RuleError("Solve needs a negative equation literal");
  auto sb = solve_binding(c, i);
  if (!sb) {
    Term l = lit.lhs(), r = lit.rhs();
    if (l.is_var() || r.is_var()) throw RuleError("Solve occurs-check failed on " + lit.show());
    throw RuleError("Solve needs a variable on one side of " + lit.show());
  }
  Substitution sigma = Substitution::single(sb->var, sb->image);
  std::vector<Literal> lits;
  lits.reserve(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k == i && !keep) continue;
    lits.emplace_back(substitute(c[k].atom(), sigma), c[k].positive());
  }
  return Clause("", std::move(lits));
}

bool chain_applicable(const Clause& c, std::size_t i, std::size_t j) {
  if (i >= c.size() || j >= c.size() || i == j) return false;
  const Literal& a = c[i];
  const Literal& b = c[j];
  if (a.positive() || b.positive() || !a.is_equation() || !b.is_equation()) return false;
  Term x = a.rhs();
  return x.is_var() && b.lhs().is_var() && b.lhs().name() == x.name();
}

Clause solve_chain(const Clause& c, std::size_t i, std::size_t j) {
  check_index(c, i);
  check_index(c, j);
  if (!chain_applicable(c, i, j))
    throw RuleError("Solve chain needs literals s = X and X = u for one variable X");
  Literal merged(Term::eq(c[i].lhs(), c[j].rhs()), false);
  std::vector<Literal> lits;
  lits.reserve(c.size() - 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k == j) continue;
    lits.push_back(k == i ? merged : c[k]);
  }
  return Clause("", std::move(lits));
}

// --- Triv ---------------------------------------------------------------------

bool trivial_applicable(const Clause& c, std::size_t i) {
  if (i >= c.size()) return false;
  const Literal& lit = c[i];
  return lit.negative() && lit.is_equation() && alpha_equal(lit.lhs(), lit.rhs());
}

Clause trivial(const Clause& c, std::size_t i) {
  check_index(c, i);
  if (c[i].positive()) throw RuleError("Triv needs a negative literal");
  if (!c[i].is_equation()) throw RuleError("Triv needs an equation literal");
  if (!alpha_equal(c[i].lhs(), c[i].rhs()))
    throw RuleError("Triv sides are not alpha-equal in " + c[i].show());
  return with_replacement(c, i, {});
}

// --- FlexRig ------------------------------------------------------------------

std::optional<FlexRigidInfo> flex_rigid_kind(const Clause& c, std::size_t i) {
  if (i >= c.size()) return std::nullopt;
  const Literal& lit = c[i];
  if (lit.positive() || !lit.is_equation()) return std::nullopt;
  Term l = lit.lhs(), r = lit.rhs();
  bool lflex = is_free_var_head(l);
  bool rflex = is_free_var_head(r);
  if (lflex == rflex) return std::nullopt;  // flex-flex or rigid-rigid
  const Term& flex_side = lflex ? l : r;
  const Term& rigid_side = lflex ? r : l;
  Term f = head_under_prefix(flex_side);
  return FlexRigidInfo{i, lflex, f, rigid_side};
}

namespace {

// An imitation/projection binding argument: a fresh helper applied to
// variables drawn from the binder prefix and the literal's free variables,
// or (below depth 1) a rigid head over such arguments again.
bool valid_binding_arg(const Term& t, const std::vector<std::string>& prefix,
                       const std::set<std::string>& literal_free, const Clause& c,
                       std::set<std::string>& helpers_seen, std::string* why) {
  Term h = t.head();
  std::vector<Term> args = t.args();
  if (h.is_var() && std::find(prefix.begin(), prefix.end(), h.name()) == prefix.end()) {
    // helper position
    if (c.free_var_names().count(h.name())) {
      *why = "binding helper '" + h.name() + "' already occurs in the clause";
      return false;
    }
    if (!helpers_seen.insert(h.name()).second) {
      *why = "binding helper '" + h.name() + "' is reused";
      return false;
    }
    for (const Term& a : args) {
      if (!a.is_var()) {
        *why = "helper arguments must be variables, got " + a.show();
        return false;
      }
      bool in_prefix = std::find(prefix.begin(), prefix.end(), a.name()) != prefix.end();
      if (!in_prefix && !literal_free.count(a.name())) {
        *why = "helper argument '" + a.name() + "' is neither bound nor free in the literal";
        return false;
      }
    }
    return true;
  }
  if (h.is_const()) {
    for (const Term& a : args)
      if (!valid_binding_arg(a, prefix, literal_free, c, helpers_seen, why)) return false;
    return true;
  }
  *why = "binding argument " + t.show() + " is neither a helper application nor rigid";
  return false;
}

}  // namespace

Clause flex_rigid(const Clause& c, std::size_t i, const Term& binding) {
  check_index(c, i);
  auto info = flex_rigid_kind(c, i);
  if (!info) throw RuleError("literal is not a flex-rigid disequation: " + c[i].show());
  if (binding.type() != info->flex_var.type())
    throw RuleError("binding type " + binding.type().show() + " does not match variable " +
                    info->flex_var.name() + " : " + info->flex_var.type().show());
  if (!binding.is_beta_normal()) throw RuleError("binding must be beta-normal");

  std::vector<std::string> prefix;
  Term body = binding;
  while (body.is_lam()) {
    prefix.push_back(body.bound_name());
    body = body.body();
  }
  Term bh = body.head();
  if (bh.is_var()) {
    if (std::find(prefix.begin(), prefix.end(), bh.name()) == prefix.end())
      throw RuleError("binding head '" + bh.name() +
                      "' must imitate the rigid head or project a bound argument");
  } else {
    Term rigid_head = head_under_prefix(info->rigid_side);
    if (!rigid_head.is_const())
      throw RuleError("rigid side has no constant head to imitate");
    if (bh.name() != rigid_head.name() || bh.type() != rigid_head.type())
      throw RuleError("binding head '" + bh.name() + "' does not imitate rigid head '" +
                      rigid_head.name() + "'");
  }

  std::set<std::string> literal_free = c[i].atom().free_var_names();
  std::set<std::string> helpers_seen;
  std::string why;
  for (const Term& a : body.args())
    if (!valid_binding_arg(a, prefix, literal_free, c, helpers_seen, &why))
      throw RuleError("inadmissible binding " + binding.show() + ": " + why);

  std::vector<Literal> lits = c.literals();
  lits.emplace_back(Term::eq(info->flex_var, binding), false);
  return Clause("", std::move(lits));
}

// --- Fac ----------------------------------------------------------------------

Clause factor(const Clause& c, std::size_t i, std::size_t j) {
  check_index(c, i);
  check_index(c, j);
  if (i == j) throw RuleError("Fac needs two distinct literals");
  if (c[i].positive() != c[j].positive())
    throw RuleError("Fac needs literals of equal polarity");
  Literal constraint(Term::eq(c[i].atom(), c[j].atom()), false);
  return with_replacement(c, j, {constraint});
}

// --- Equiv --------------------------------------------------------------------

Clause equiv(const Clause& c, std::size_t i) {
  check_index(c, i);
  const Literal& lit = c[i];
  if (lit.positive()) throw RuleError("Equiv needs a negative literal");
  if (!lit.is_equation() || !lit.lhs().type().is_o())
    throw RuleError("Equiv needs an equation between propositions, got " + lit.show());
  Term p = lit.lhs(), q = lit.rhs();
  Term expansion = Term::disj(Term::conj(p, q), Term::conj(Term::neg(p), Term::neg(q)));
  return with_replacement(c, i, {Literal(expansion, false)});
}

// --- Cnf ----------------------------------------------------------------------

std::vector<Clause> cnf_step(const Clause& c, std::size_t i) {
  check_index(c, i);
  const Literal& lit = c[i];
  if (!lit.atom().has_connective_head())
    throw RuleError("Cnf needs a literal with a top connective, got " + lit.show());
  Term h = lit.atom().head();
  std::vector<Term> args = lit.atom().args();
  bool pos = lit.positive();

  if (h.name() == "~")
    return {with_replacement(c, i, {Literal(args[0], !pos)})};

  bool conj_like = (h.name() == "&") == pos;  // [A&B]^T and [A|B]^F split in two
  if (conj_like) {
    return {with_replacement(c, i, {Literal(args[0], pos)}),
            with_replacement(c, i, {Literal(args[1], pos)})};
  }
  return {with_replacement(c, i, {Literal(args[0], pos), Literal(args[1], pos)})};
}

std::vector<Clause> cnf_all(const Clause& c) {
  std::vector<Clause> queue{c};
  std::vector<Clause> out;
  std::size_t guard = 0;
  while (!queue.empty()) {
    if (++guard > 100000) throw RuleError("cnf closure did not terminate");
    Clause cur = queue.front();
    queue.erase(queue.begin());
    std::size_t target = cur.size();
    for (std::size_t k = 0; k < cur.size(); ++k)
      if (cur[k].atom().has_connective_head()) {
        target = k;
        break;
      }
    if (target == cur.size()) {
      out.push_back(std::move(cur));
      continue;
    }
    for (Clause& next : cnf_step(cur, target)) queue.push_back(std::move(next));
  }
  return out;
}

// --- binding enumeration --------------------------------------------------------

namespace {

void collect_constants(const Term& t, std::map<std::string, Term>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return;
    case Term::Kind::Const:
      if (!t.is_logical_const()) out.emplace(t.name() + "#" + t.type().show(), t);
      return;
    case Term::Kind::App:
      collect_constants(t.fn(), out);
      collect_constants(t.arg(), out);
      return;
    case Term::Kind::Lam:
      collect_constants(t.body(), out);
      return;
  }
}

struct BindingBuilder {
  std::vector<std::string> prefix_names;
  std::vector<Type> prefix_types;
  std::vector<Term> w_vars;  // helper argument vector
  std::map<std::string, Term> clause_consts;
  std::set<std::string> used_names;
  std::size_t cap = 128;

  Term fresh_helper(Type ty) {
    std::string name = fresh_name("H", used_names);
    used_names.insert(name);
    std::vector<Type> argtys;
    argtys.reserve(w_vars.size());
    for (const Term& w : w_vars) argtys.push_back(w.type());
    Type full = ty;
    for (auto it = argtys.rbegin(); it != argtys.rend(); ++it) full = Type::arrow(*it, full);
    return Term::app(Term::var(name, full), w_vars);
  }

  // All admissible filler terms of the requested type at the given depth.
  void slots(Type ty, std::size_t depth, std::vector<Term>& out) {
    out.push_back(fresh_helper(ty));
    if (depth <= 1) return;
    for (const auto& [key, cst] : clause_consts) {
      if (cst.type().result() != ty || cst.type().arity() == 0) continue;
      std::vector<std::vector<Term>> parts;
      bool ok = true;
      for (const Type& at : cst.type().arguments()) {
        std::vector<Term> sub;
        slots(at, depth - 1, sub);
        if (sub.empty()) {
          ok = false;
          break;
        }
        parts.push_back(std::move(sub));
      }
      if (!ok) continue;
      std::vector<std::size_t> pick(parts.size(), 0);
      while (true) {
        std::vector<Term> args;
        for (std::size_t k = 0; k < parts.size(); ++k) args.push_back(parts[k][pick[k]]);
        out.push_back(Term::app(cst, args));
        if (out.size() >= cap) return;
        std::size_t k = 0;
        for (; k < pick.size(); ++k) {
          if (++pick[k] < parts[k].size()) break;
          pick[k] = 0;
        }
        if (k == pick.size()) break;
      }
    }
  }

  // Every choice of argument fillers up to `depth`, lambda-wrapped.
  void build_all(const Term& head, std::size_t depth, std::vector<Term>& out) {
    Type hty = head.type();
    std::vector<std::vector<Term>> parts;
    for (const Type& at : hty.arguments()) {
      std::vector<Term> sub;
      slots(at, depth, sub);
      parts.push_back(std::move(sub));
    }
    std::vector<std::size_t> pick(parts.size(), 0);
    while (true) {
      std::vector<Term> args;
      for (std::size_t k = 0; k < parts.size(); ++k) args.push_back(parts[k][pick[k]]);
      Term binding = Term::app(head, args);
      for (std::size_t k = prefix_names.size(); k-- > 0;)
        binding = Term::lam(prefix_names[k], prefix_types[k], binding);
      out.push_back(std::move(binding));
      if (out.size() >= cap) return;
      if (parts.empty()) break;
      std::size_t k = 0;
      for (; k < pick.size(); ++k) {
        if (++pick[k] < parts[k].size()) break;
        pick[k] = 0;
      }
      if (k == pick.size()) break;
    }
  }
};

}  // namespace

std::vector<Term> enumerate_bindings(const Clause& c, std::size_t i, std::size_t helper_depth) {
  auto info = flex_rigid_kind(c, i);
  if (!info) return {};
  if (helper_depth == 0) helper_depth = 1;

  Type fty = info->flex_var.type();
  std::vector<Type> prefix_types = fty.arguments();
  Type base = fty.result();

  std::set<std::string> avoid = c.free_var_names();
  std::vector<std::string> prefix_names;
  std::vector<Term> prefix_vars;
  for (std::size_t k = 0; k < prefix_types.size(); ++k) {
    std::string n = fresh_name("Y", avoid);
    avoid.insert(n);
    prefix_names.push_back(n);
    prefix_vars.push_back(Term::var(n, prefix_types[k]));
  }

  // Candidate heads: the rigid head (imitation) and suitable bound arguments
  // (projections).
  std::vector<Term> heads;
  Term rigid_head = head_under_prefix(info->rigid_side);
  if (rigid_head.is_const() && rigid_head.type().result() == base) heads.push_back(rigid_head);
  for (const Term& y : prefix_vars)
    if (y.type().result() == base) heads.push_back(y);

  // Helper argument vectors: the bound prefix alone, and the prefix extended
  // by the literal's free variables (the paper-style generalization).
  std::vector<std::vector<Term>> w_variants;
  w_variants.push_back(prefix_vars);
  auto lit_fvs = c[i].atom().free_vars();
  if (!lit_fvs.empty()) {
    std::vector<Term> extended = prefix_vars;
    for (const auto& [name, ty] : lit_fvs) extended.push_back(Term::var(name, ty));
    w_variants.push_back(std::move(extended));
  }

  std::vector<Term> out;
  for (const Term& head : heads) {
    for (const auto& w : w_variants) {
      if (head.type().arity() == 0 && &w != &w_variants.front()) continue;  // no helpers anyway
      BindingBuilder builder;
      builder.prefix_names = prefix_names;
      builder.prefix_types = prefix_types;
      builder.w_vars = w;
      builder.used_names = avoid;
      for (const std::string& n : prefix_names) builder.used_names.insert(n);
      if (helper_depth > 1)
        for (const Literal& lit : c.literals()) collect_constants(lit.atom(), builder.clause_consts);
      builder.build_all(head, helper_depth, out);
    }
  }
  return out;
}

std::optional<Term> instantiate_hint(const std::string& hint_var, const Term& pattern,
                                     const Term& flex_var, const Clause& target) {
  if (pattern.type() != flex_var.type()) return std::nullopt;
  std::set<std::string> avoid = target.free_var_names();
  avoid.insert(flex_var.name());
  Substitution subst;
  for (const auto& [name, ty] : pattern.free_vars()) {
    if (name == hint_var) {
      if (ty != flex_var.type()) return std::nullopt;
      subst.bind(Term::var(name, ty), flex_var);
    } else {
      std::string fresh = fresh_name(name, avoid);
      avoid.insert(fresh);
      subst.bind(Term::var(name, ty), Term::var(fresh, ty));
    }
  }
  return substitute(pattern, subst);
}

}  // namespace erue
