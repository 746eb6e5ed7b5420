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

#include "erue/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "erue/error.hpp"

namespace erue {

namespace {

// --- lexing -------------------------------------------------------------------

enum class Tok {
  Ident, Str, LParen, RParen, Comma, Semi, Dot, Colon, Assign, Star,
  Plus, Minus, Eq, Amp, OrObj, Bar, Tilde, Hat, Gt, End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Strips a % comment, honoring double-quoted strings.
std::string strip_comment(const std::string& line) {
  bool in_str = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    if (line[k] == '"') in_str = !in_str;
    if (line[k] == '%' && !in_str) return line.substr(0, k);
  }
  return line;
}

std::vector<Token> lex_line(const std::string& raw, int lineno, const std::string& src) {
  std::string line = strip_comment(raw);
  std::vector<Token> out;
  std::size_t k = 0;
  auto push = [&](Tok t, std::string text, std::size_t at) {
    out.push_back(Token{t, std::move(text), lineno, static_cast<int>(at) + 1});
  };
  while (k < line.size()) {
    char c = line[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      continue;
    }
    std::size_t at = k;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t e = k;
      while (e < line.size() && ident_char(line[e])) ++e;
      push(Tok::Ident, line.substr(k, e - k), at);
      k = e;
      continue;
    }
    if (c == '"') {
      std::size_t e = line.find('"', k + 1);
      if (e == std::string::npos) throw ParseError("unterminated string", src, lineno, (int)k + 1);
      push(Tok::Str, line.substr(k + 1, e - k - 1), at);
      k = e + 1;
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, "(", at); ++k; break;
      case ')': push(Tok::RParen, ")", at); ++k; break;
      case ',': push(Tok::Comma, ",", at); ++k; break;
      case ';': push(Tok::Semi, ";", at); ++k; break;
      case '.': push(Tok::Dot, ".", at); ++k; break;
      case '*': push(Tok::Star, "*", at); ++k; break;
      case '+': push(Tok::Plus, "+", at); ++k; break;
      case '-': push(Tok::Minus, "-", at); ++k; break;
      case '=': push(Tok::Eq, "=", at); ++k; break;
      case '&': push(Tok::Amp, "&", at); ++k; break;
      case '~': push(Tok::Tilde, "~", at); ++k; break;
      case '^': push(Tok::Hat, "^", at); ++k; break;
      case '>': push(Tok::Gt, ">", at); ++k; break;
      case ':':
        if (k + 1 < line.size() && line[k + 1] == '=') {
          push(Tok::Assign, ":=", at);
          k += 2;
        } else {
          push(Tok::Colon, ":", at);
          ++k;
        }
        break;
      case '|':
        if (k + 2 < line.size() && line[k + 1] == 'o' && line[k + 2] == '|') {
          push(Tok::OrObj, "|o|", at);
          k += 3;
        } else {
          push(Tok::Bar, "|", at);
          ++k;
        }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", src, lineno,
                         (int)k + 1);
    }
  }
  push(Tok::End, "", line.size());
  return out;
}

// --- token cursor ----------------------------------------------------------------

struct Cursor {
  std::vector<Token> toks;
  std::size_t pos = 0;
  std::string src;

  const Token& peek() const { return toks[pos]; }
  bool at(Tok t) const { return toks[pos].kind == t; }
  bool at_ident(const char* word) const {
    return toks[pos].kind == Tok::Ident && toks[pos].text == word;
  }
  Token next() { return toks[pos++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = toks[pos];
    throw ParseError(msg + (t.kind == Tok::End ? " at end of line" : " at '" + t.text + "'"),
                     src, t.line, t.col);
  }
  Token expect(Tok t, const char* what) {
    if (!at(t)) fail(std::string("expected ") + what);
    return next();
  }
  bool done() const { return at(Tok::End); }
};

// --- raw syntax trees ---------------------------------------------------------------

struct Ast {
  enum class K { Id, App, Lam, Eq, And, Or, Not };
  K k = K::Id;
  std::string name;       // Id; Lam binder
  Type ann = Type::i();   // Lam annotation
  std::vector<Ast> kids;  // App: head then args; binary: l, r; Not/Lam: one kid
  int line = 0, col = 0;
};

struct RawLiteral {
  Ast atom;
  bool positive;
};

Type parse_type(Cursor& c);

Type parse_type_primary(Cursor& c) {
  if (c.at(Tok::LParen)) {
    c.next();
    Type t = parse_type(c);
    c.expect(Tok::RParen, "')'");
    return t;
  }
  Token t = c.expect(Tok::Ident, "a type (i or o)");
  if (t.text == "i") return Type::i();
  if (t.text == "o") return Type::o();
  throw ParseError("unknown base type '" + t.text + "'", c.src, t.line, t.col);
}

Type parse_type(Cursor& c) {
  Type lhs = parse_type_primary(c);
  if (c.at(Tok::Gt)) {
    c.next();
    return Type::arrow(lhs, parse_type(c));
  }
  return lhs;
}

Ast parse_term_ast(Cursor& c);

Ast parse_primary(Cursor& c) {
  const Token& t = c.peek();
  if (c.at(Tok::Ident)) {
    Ast a;
    a.k = Ast::K::Id;
    a.name = t.text;
    a.line = t.line;
    a.col = t.col;
    c.next();
    return a;
  }
  if (c.at(Tok::LParen)) {
    c.next();
    Ast a = parse_term_ast(c);
    c.expect(Tok::RParen, "')'");
    return a;
  }
  if (c.at(Tok::Hat)) {
    Token hat = c.next();
    Token binder = c.expect(Tok::Ident, "a bound variable");
    if (!is_variable_name(binder.text))
      throw ParseError("lambda binder must be uppercase: '" + binder.text + "'", c.src,
                       binder.line, binder.col);
    c.expect(Tok::Colon, "':'");
    Type ann = parse_type(c);
    c.expect(Tok::Dot, "'.'");
    Ast body = parse_term_ast(c);
    Ast a;
    a.k = Ast::K::Lam;
    a.name = binder.text;
    a.ann = ann;
    a.kids.push_back(std::move(body));
    a.line = hat.line;
    a.col = hat.col;
    return a;
  }
  c.fail("expected a term");
}

Ast parse_application(Cursor& c) {
  Ast head = parse_primary(c);
  while (c.at(Tok::LParen)) {
    Token lp = c.next();
    Ast app;
    app.k = Ast::K::App;
    app.line = lp.line;
    app.col = lp.col;
    app.kids.push_back(std::move(head));
    while (true) {
      app.kids.push_back(parse_term_ast(c));
      if (c.at(Tok::Comma)) {
        c.next();
        continue;
      }
      break;
    }
    c.expect(Tok::RParen, "')'");
    head = std::move(app);
  }
  return head;
}

Ast parse_equation(Cursor& c) {
  Ast lhs = parse_application(c);
  if (c.at(Tok::Eq)) {
    Token eq = c.next();
    Ast rhs = parse_application(c);
    Ast a;
    a.k = Ast::K::Eq;
    a.line = eq.line;
    a.col = eq.col;
    a.kids.push_back(std::move(lhs));
    a.kids.push_back(std::move(rhs));
    return a;
  }
  return lhs;
}

Ast parse_negation(Cursor& c) {
  if (c.at(Tok::Tilde)) {
    Token t = c.next();
    Ast a;
    a.k = Ast::K::Not;
    a.line = t.line;
    a.col = t.col;
    a.kids.push_back(parse_negation(c));
    return a;
  }
  return parse_equation(c);
}

Ast parse_conjunction(Cursor& c) {
  Ast lhs = parse_negation(c);
  while (c.at(Tok::Amp)) {
    Token t = c.next();
    Ast a;
    a.k = Ast::K::And;
    a.line = t.line;
    a.col = t.col;
    a.kids.push_back(std::move(lhs));
    a.kids.push_back(parse_negation(c));
    lhs = std::move(a);
  }
  return lhs;
}

Ast parse_term_ast(Cursor& c) {
  Ast lhs = parse_conjunction(c);
  while (c.at(Tok::OrObj)) {
    Token t = c.next();
    Ast a;
    a.k = Ast::K::Or;
    a.line = t.line;
    a.col = t.col;
    a.kids.push_back(std::move(lhs));
    a.kids.push_back(parse_conjunction(c));
    lhs = std::move(a);
  }
  return lhs;
}

RawLiteral parse_literal(Cursor& c) {
  bool positive;
  if (c.at(Tok::Plus))
    positive = true;
  else if (c.at(Tok::Minus))
    positive = false;
  else
    c.fail("expected a literal (+(...) or -(...))");
  c.next();
  c.expect(Tok::LParen, "'('");
  Ast atom = parse_term_ast(c);
  c.expect(Tok::RParen, "')'");
  return RawLiteral{std::move(atom), positive};
}

std::vector<RawLiteral> parse_literal_list(Cursor& c) {
  std::vector<RawLiteral> lits;
  lits.push_back(parse_literal(c));
  while (c.at(Tok::Bar)) {
    c.next();
    lits.push_back(parse_literal(c));
  }
  return lits;
}

// --- type inference -----------------------------------------------------------------

// Inference types: ground bases, arrows, and metavariables resolved by
// unification. Every clause (or script step) is one inference scope.
struct TyX {
  enum class K { Mv, I, O, Arrow } k = K::Mv;
  int mv = -1;
  std::shared_ptr<TyX> a, b;
};
using TyXP = std::shared_ptr<TyX>;

class TypeInf {
 public:
  explicit TypeInf(std::string src) : src_(std::move(src)) {}

  TyXP fresh() {
    auto t = std::make_shared<TyX>();
    t->mv = static_cast<int>(bindings_.size());
    bindings_.push_back(nullptr);
    return t;
  }

  TyXP of(const Type& ty) {
    auto t = std::make_shared<TyX>();
    if (ty.is_arrow()) {
      t->k = TyX::K::Arrow;
      t->a = of(ty.domain());
      t->b = of(ty.codomain());
    } else {
      t->k = ty.is_i() ? TyX::K::I : TyX::K::O;
    }
    return t;
  }

  TyXP arrow(TyXP a, TyXP b) {
    auto t = std::make_shared<TyX>();
    t->k = TyX::K::Arrow;
    t->a = std::move(a);
    t->b = std::move(b);
    return t;
  }

  TyXP shorten(TyXP t) {
    while (t->k == TyX::K::Mv && bindings_[t->mv]) t = bindings_[t->mv];
    return t;
  }

  void unify(TyXP x, TyXP y, int line, int col) {
    x = shorten(std::move(x));
    y = shorten(std::move(y));
    if (x == y) return;
    if (x->k == TyX::K::Mv) {
      if (occurs(x->mv, y))
        throw ParseError("cannot infer a finite type", src_, line, col);
      bindings_[x->mv] = y;
      return;
    }
    if (y->k == TyX::K::Mv) {
      unify(y, x, line, col);
      return;
    }
    if (x->k != y->k)
      throw ParseError("type mismatch: " + show(x) + " vs " + show(y), src_, line, col);
    if (x->k == TyX::K::Arrow) {
      unify(x->a, y->a, line, col);
      unify(x->b, y->b, line, col);
    }
  }

  std::optional<Type> ground(TyXP t) {
    t = shorten(std::move(t));
    switch (t->k) {
      case TyX::K::Mv:
        return std::nullopt;
      case TyX::K::I:
        return Type::i();
      case TyX::K::O:
        return Type::o();
      case TyX::K::Arrow: {
        auto a = ground(t->a);
        auto b = ground(t->b);
        if (!a || !b) return std::nullopt;
        return Type::arrow(*a, *b);
      }
    }
    return std::nullopt;
  }

  std::string show(TyXP t) {
    t = shorten(std::move(t));
    switch (t->k) {
      case TyX::K::Mv:
        return "?" + std::to_string(t->mv);
      case TyX::K::I:
        return "i";
      case TyX::K::O:
        return "o";
      case TyX::K::Arrow: {
        std::string dom = show(t->a);
        if (shorten(t->a)->k == TyX::K::Arrow) dom = "(" + dom + ")";
        return dom + ">" + show(t->b);
      }
    }
    return "?";
  }

 private:
  bool occurs(int mv, TyXP t) {
    t = shorten(std::move(t));
    if (t->k == TyX::K::Mv) return t->mv == mv;
    if (t->k == TyX::K::Arrow) return occurs(mv, t->a) || occurs(mv, t->b);
    return false;
  }

  std::vector<TyXP> bindings_;
  std::string src_;
};

// One variable-typing scope: a problem clause, a script step, or a hint line.
class TermScope {
 public:
  TermScope(const Signature& sig, const std::string& src) : sig_(sig), inf_(src), src_(src) {}

  TyXP infer(const Ast& a) {
    switch (a.k) {
      case Ast::K::Id: {
        for (auto it = lambdas_.rbegin(); it != lambdas_.rend(); ++it)
          if (it->first == a.name) return inf_.of(it->second);
        if (is_variable_name(a.name)) {
          auto [it, fresh] = vars_.try_emplace(a.name, nullptr);
          if (fresh) it->second = inf_.fresh();
          return it->second;
        }
        auto it = sig_.find(a.name);
        if (it == sig_.end())
          throw ParseError("unknown constant '" + a.name + "'", src_, a.line, a.col);
        return inf_.of(it->second);
      }
      case Ast::K::App: {
        TyXP t = infer(a.kids[0]);
        for (std::size_t k = 1; k < a.kids.size(); ++k) {
          TyXP arg = infer(a.kids[k]);
          TyXP res = inf_.fresh();
          inf_.unify(t, inf_.arrow(arg, res), a.line, a.col);
          t = res;
        }
        return t;
      }
      case Ast::K::Lam: {
        lambdas_.emplace_back(a.name, a.ann);
        TyXP body = infer(a.kids[0]);
        lambdas_.pop_back();
        return inf_.arrow(inf_.of(a.ann), body);
      }
      case Ast::K::Eq: {
        TyXP l = infer(a.kids[0]);
        TyXP r = infer(a.kids[1]);
        inf_.unify(l, r, a.line, a.col);
        return inf_.of(Type::o());
      }
      case Ast::K::And:
      case Ast::K::Or: {
        inf_.unify(infer(a.kids[0]), inf_.of(Type::o()), a.line, a.col);
        inf_.unify(infer(a.kids[1]), inf_.of(Type::o()), a.line, a.col);
        return inf_.of(Type::o());
      }
      case Ast::K::Not: {
        inf_.unify(infer(a.kids[0]), inf_.of(Type::o()), a.line, a.col);
        return inf_.of(Type::o());
      }
    }
    throw ParseError("unreachable syntax node", src_, a.line, a.col);
  }

  void infer_atom(const Ast& a) { inf_.unify(infer(a), inf_.of(Type::o()), a.line, a.col); }

  void constrain_var(const std::string& name, const Ast& image, int line, int col) {
    auto [it, fresh] = vars_.try_emplace(name, nullptr);
    if (fresh) it->second = inf_.fresh();
    inf_.unify(it->second, infer(image), line, col);
  }

  Type var_type(const std::string& name, int line, int col) {
    auto it = vars_.find(name);
    if (it == vars_.end())
      throw ParseError("variable '" + name + "' does not occur", src_, line, col);
    auto g = inf_.ground(it->second);
    if (!g)
      throw ParseError("cannot infer the type of variable '" + name + "'", src_, line, col);
    return *g;
  }

  Term build(const Ast& a) {
    switch (a.k) {
      case Ast::K::Id: {
        for (auto it = lambdas_.rbegin(); it != lambdas_.rend(); ++it)
          if (it->first == a.name) return Term::var(a.name, it->second);
        if (is_variable_name(a.name)) return Term::var(a.name, var_type(a.name, a.line, a.col));
        return Term::constant(a.name, sig_.at(a.name));
      }
      case Ast::K::App: {
        Term t = build(a.kids[0]);
        for (std::size_t k = 1; k < a.kids.size(); ++k) t = Term::app(t, build(a.kids[k]));
        return t;
      }
      case Ast::K::Lam: {
        lambdas_.emplace_back(a.name, a.ann);
        Term body = build(a.kids[0]);
        lambdas_.pop_back();
        return Term::lam(a.name, a.ann, body);
      }
      case Ast::K::Eq:
        return Term::eq(build(a.kids[0]), build(a.kids[1]));
      case Ast::K::And:
        return Term::conj(build(a.kids[0]), build(a.kids[1]));
      case Ast::K::Or:
        return Term::disj(build(a.kids[0]), build(a.kids[1]));
      case Ast::K::Not:
        return Term::neg(build(a.kids[0]));
    }
    throw ParseError("unreachable syntax node", src_, a.line, a.col);
  }

  std::vector<Literal> build_literals(const std::vector<RawLiteral>& raw) {
    std::vector<Literal> lits;
    lits.reserve(raw.size());
    for (const RawLiteral& rl : raw) lits.emplace_back(build(rl.atom), rl.positive);
    return lits;
  }

 private:
  const Signature& sig_;
  TypeInf inf_;
  std::map<std::string, TyXP> vars_;
  std::vector<std::pair<std::string, Type>> lambdas_;
  std::string src_;
};

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  lines.push_back(cur);
  return lines;
}

bool blank_tokens(const std::vector<Token>& toks) { return toks.size() == 1; }

}  // namespace

// --- problems -----------------------------------------------------------------------

Problem parse_problem(const std::string& text, const std::string& source_label) {
  Problem problem;
  problem.source = source_label;
  std::vector<std::string> lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    Cursor c{lex_line(lines[n], static_cast<int>(n) + 1, source_label), 0, source_label};
    if (blank_tokens(c.toks)) continue;
    if (c.at_ident("const")) {
      c.next();
      Token name = c.expect(Tok::Ident, "a constant name");
      if (is_variable_name(name.text))
        throw ParseError("constants must start lowercase: '" + name.text + "'", source_label,
                         name.line, name.col);
      c.expect(Tok::Colon, "':'");
      Type ty = parse_type(c);
      c.expect(Tok::Dot, "'.'");
      if (!c.done()) c.fail("trailing input after declaration");
      if (!problem.signature.emplace(name.text, ty).second)
        throw ParseError("duplicate constant '" + name.text + "'", source_label, name.line,
                         name.col);
      continue;
    }
    if (c.at_ident("clause")) {
      c.next();
      Token id = c.expect(Tok::Ident, "a clause id");
      c.expect(Tok::Colon, "':'");
      std::vector<RawLiteral> raw = parse_literal_list(c);
      c.expect(Tok::Dot, "'.'");
      if (!c.done()) c.fail("trailing input after clause");
      if (problem.find(id.text))
        throw ParseError("duplicate clause id '" + id.text + "'", source_label, id.line, id.col);
      TermScope scope(problem.signature, source_label);
      for (const RawLiteral& rl : raw) scope.infer_atom(rl.atom);
      problem.clauses.emplace_back(id.text, scope.build_literals(raw));
      continue;
    }
    c.fail("expected 'const' or 'clause'");
  }
  return problem;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Problem load_problem(const std::filesystem::path& path) {
  return parse_problem(read_file(path), path.string());
}

// --- scripts -------------------------------------------------------------------------

std::string script_problem_ref(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    Cursor c{lex_line(lines[n], static_cast<int>(n) + 1, ""), 0, ""};
    if (blank_tokens(c.toks)) continue;
    if (c.at_ident("problem")) {
      c.next();
      return c.expect(Tok::Str, "a quoted problem path").text;
    }
    return "";
  }
  return "";
}

ProofScript parse_script(const std::string& text, const Problem& problem,
                         const std::string& source_label) {
  ProofScript script;
  script.problem = problem;
  script.name = source_label;

  std::set<std::string> known_ids;
  for (const Clause& c : problem.clauses) known_ids.insert(c.id());
  bool saw_problem = false;
  bool saw_goal = false;

  std::vector<std::string> lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    int lineno = static_cast<int>(n) + 1;
    Cursor c{lex_line(lines[n], lineno, source_label), 0, source_label};
    if (blank_tokens(c.toks)) continue;

    if (c.at_ident("problem")) {
      if (saw_problem) c.fail("duplicate problem line");
      c.next();
      script.problem_ref = c.expect(Tok::Str, "a quoted problem path").text;
      if (!c.done()) c.fail("trailing input after problem line");
      saw_problem = true;
      continue;
    }

    if (!c.at_ident("step")) c.fail("expected 'problem' or 'step'");
    c.next();

    ProofStep step;
    step.line = lineno;
    while (true) {
      Token id = c.expect(Tok::Ident, "a result id");
      if (known_ids.count(id.text) ||
          std::find(step.ids.begin(), step.ids.end(), id.text) != step.ids.end())
        throw ParseError("duplicate clause id '" + id.text + "'", source_label, id.line, id.col);
      step.ids.push_back(id.text);
      if (c.at(Tok::Comma)) {
        c.next();
        continue;
      }
      break;
    }
    c.expect(Tok::Eq, "'='");
    Token rule = c.expect(Tok::Ident, "a rule label");
    auto r = rule_from_name(rule.text);
    if (!r)
      throw ParseError("unknown rule '" + rule.text + "'", source_label, rule.line, rule.col);
    step.rule = *r;
    if (c.at(Tok::Star)) {
      c.next();
      step.starred = true;
    }
    c.expect(Tok::LParen, "'('");
    while (true) {
      Token prem = c.expect(Tok::Ident, "a premise id");
      step.premises.push_back(prem.text);
      if (c.at(Tok::Comma)) {
        c.next();
        continue;
      }
      break;
    }
    std::optional<Ast> binding_ast;
    Token bind_tok{Tok::End, "", 0, 0};
    if (c.at(Tok::Semi)) {
      c.next();
      if (!c.at_ident("bind")) c.fail("expected 'bind'");
      c.next();
      bind_tok = c.expect(Tok::Ident, "a variable name");
      if (!is_variable_name(bind_tok.text))
        throw ParseError("bound name must be a variable: '" + bind_tok.text + "'", source_label,
                         bind_tok.line, bind_tok.col);
      c.expect(Tok::Assign, "':='");
      binding_ast = parse_term_ast(c);
      step.binding_var = bind_tok.text;
    }
    c.expect(Tok::RParen, "')'");
    if (!c.at_ident("expect")) c.fail("expected 'expect'");
    c.next();

    std::vector<std::vector<RawLiteral>> raw_clauses;
    bool empty_goal = false;
    if (c.at_ident("empty")) {
      c.next();
      empty_goal = true;
    } else {
      raw_clauses.push_back(parse_literal_list(c));
      while (c.at(Tok::Semi)) {
        c.next();
        raw_clauses.push_back(parse_literal_list(c));
      }
    }
    if (!c.done()) c.fail("trailing input after step");

    if (empty_goal) {
      if (step.ids.size() != 1)
        throw ParseError("an empty expectation takes exactly one id", source_label, lineno, 1);
      if (saw_goal)
        throw ParseError("more than one step expects the empty clause", source_label, lineno, 1);
      saw_goal = true;
      step.expected.push_back(Clause(step.ids[0], {}));
    } else {
      if (raw_clauses.size() != step.ids.size())
        throw ParseError("step declares " + std::to_string(step.ids.size()) + " ids but " +
                             std::to_string(raw_clauses.size()) + " expected clauses",
                         source_label, lineno, 1);
      TermScope scope(problem.signature, source_label);
      for (const auto& rc : raw_clauses)
        for (const RawLiteral& rl : rc) scope.infer_atom(rl.atom);
      if (binding_ast)
        scope.constrain_var(bind_tok.text, *binding_ast, bind_tok.line, bind_tok.col);
      if (binding_ast) step.binding = scope.build(*binding_ast);
      for (std::size_t k = 0; k < raw_clauses.size(); ++k)
        step.expected.push_back(Clause(step.ids[k], scope.build_literals(raw_clauses[k])));
    }
    if (empty_goal && binding_ast) {
      // A binding with an empty expectation still needs typing; give it its
      // own scope so the template does not float untyped.
      TermScope scope(problem.signature, source_label);
      scope.constrain_var(bind_tok.text, *binding_ast, bind_tok.line, bind_tok.col);
      step.binding = scope.build(*binding_ast);
    }

    for (const std::string& id : step.ids) known_ids.insert(id);
    script.steps.push_back(std::move(step));
  }
  return script;
}

ProofScript load_script(const std::filesystem::path& path) {
  std::string text = read_file(path);
  std::string ref = script_problem_ref(text);
  if (ref.empty()) throw Error(path.string() + ": script has no problem line");
  Problem problem;
  if (ref.rfind("builtin:", 0) == 0) {
    problem = builtin_problem();
  } else {
    std::filesystem::path p(ref);
    if (p.is_relative()) p = path.parent_path() / p;
    problem = load_problem(p);
  }
  ProofScript script = parse_script(text, problem, path.string());
  return script;
}

// --- hints ---------------------------------------------------------------------------

std::vector<Hint> parse_hints(const std::string& text, const Signature& sig,
                              const std::string& source_label) {
  std::vector<Hint> hints;
  std::vector<std::string> lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    Cursor c{lex_line(lines[n], static_cast<int>(n) + 1, source_label), 0, source_label};
    if (blank_tokens(c.toks)) continue;
    if (!c.at_ident("bind")) c.fail("expected 'bind'");
    c.next();
    Token var = c.expect(Tok::Ident, "a variable name");
    if (!is_variable_name(var.text))
      throw ParseError("hint must bind a variable: '" + var.text + "'", source_label, var.line,
                       var.col);
    c.expect(Tok::Assign, "':='");
    Ast ast = parse_term_ast(c);
    if (!c.done()) c.fail("trailing input after hint");
    TermScope scope(sig, source_label);
    scope.constrain_var(var.text, ast, var.line, var.col);
    hints.push_back(Hint{var.text, scope.build(ast)});
  }
  return hints;
}

std::vector<Hint> load_hints(const std::filesystem::path& path, const Signature& sig) {
  return parse_hints(read_file(path), sig, path.string());
}

// --- fragments -------------------------------------------------------------------------

Term parse_term(const std::string& text, const Signature& sig) {
  Cursor c{lex_line(text, 1, "<term>"), 0, "<term>"};
  Ast ast = parse_term_ast(c);
  if (!c.done()) c.fail("trailing input after term");
  TermScope scope(sig, "<term>");
  scope.infer(ast);
  return scope.build(ast);
}

Clause parse_clause(const std::string& text, const Signature& sig, const std::string& id) {
  Cursor c{lex_line(text, 1, "<clause>"), 0, "<clause>"};
  if (c.at_ident("empty")) {
    c.next();
    if (!c.done()) c.fail("trailing input after clause");
    return Clause(id, {});
  }
  std::vector<RawLiteral> raw = parse_literal_list(c);
  if (c.at(Tok::Dot)) c.next();
  if (!c.done()) c.fail("trailing input after clause");
  TermScope scope(sig, "<clause>");
  for (const RawLiteral& rl : raw) scope.infer_atom(rl.atom);
  return Clause(id, scope.build_literals(raw));
}

}  // namespace erue
