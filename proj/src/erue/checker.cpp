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

#include "erue/checker.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "erue/error.hpp"

namespace erue {

namespace {

// A perfect matching between computed and expected clause sets, up to
// variant equality. n stays tiny (Cnf closures yield two clauses here).
bool sets_match_rec(const std::vector<Clause>& computed, const std::vector<Clause>& expected,
                    std::size_t k, std::vector<bool>& used) {
  if (k == expected.size()) return true;
  for (std::size_t j = 0; j < computed.size(); ++j) {
    if (used[j] || !variant_equal(computed[j], expected[k])) continue;
    used[j] = true;
    if (sets_match_rec(computed, expected, k + 1, used)) return true;
    used[j] = false;
  }
  return false;
}

bool sets_match(const std::vector<Clause>& computed, const std::vector<Clause>& expected) {
  if (computed.size() != expected.size()) return false;
  std::vector<bool> used(computed.size(), false);
  return sets_match_rec(computed, expected, 0, used);
}

struct Search {
  const std::vector<Clause>& expected;
  bool found = false;
  std::optional<SolveMode> mode;
  std::size_t iterations = 1;
  std::vector<Clause> nearest;
  long nearest_score = -1;

  explicit Search(const std::vector<Clause>& exp) : expected(exp) {}

  std::size_t expected_lits() const {
    std::size_t n = 0;
    for (const Clause& c : expected) n += c.size();
    return n;
  }

  // Returns true when the candidate set settles the step.
  bool offer(const std::vector<Clause>& candidate, std::optional<SolveMode> m = std::nullopt,
             std::size_t iters = 1) {
    if (sets_match(candidate, expected)) {
      found = true;
      mode = m;
      iterations = iters;
      return true;
    }
    std::size_t lits = 0, weight = 0;
    for (const Clause& c : candidate) {
      lits += c.size();
      weight += c.weight();
    }
    long score = 1000 * std::llabs((long long)lits - (long long)expected_lits()) +
                 std::llabs((long long)candidate.size() - (long long)expected.size()) * 100 +
                 (long)weight;
    if (nearest_score < 0 || score < nearest_score) {
      nearest_score = score;
      nearest = candidate;
    }
    return false;
  }
};

// Iterated application of a unary rule (starred Dec/Triv): depth-first over
// literal positions, accepting a match after 1..max_depth applications.
bool search_iterated(const Clause& premise, std::size_t max_depth, Search& search,
                     const std::function<std::vector<std::size_t>(const Clause&)>& positions,
                     const std::function<Clause(const Clause&, std::size_t)>& apply,
                     std::size_t depth = 1) {
  for (std::size_t i : positions(premise)) {
    Clause next = apply(premise, i);
    if (search.offer({next}, std::nullopt, depth)) return true;
    if (depth < max_depth && search_iterated(next, max_depth, search, positions, apply, depth + 1))
      return true;
  }
  return false;
}

std::vector<std::size_t> dec_positions(const Clause& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (dec_status(c, i) == DecStatus::Applicable) out.push_back(i);
  return out;
}

std::vector<std::size_t> triv_positions(const Clause& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (trivial_applicable(c, i)) out.push_back(i);
  return out;
}

void search_solve(const Clause& c, Search& search) {
  // Fixed mode order: subst-drop, subst-keep, chain.
  for (std::size_t i = 0; i < c.size(); ++i)
    if (solve_binding(c, i) && search.offer({solve_subst(c, i, false)}, SolveMode::SubstDrop))
      return;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (solve_binding(c, i) && search.offer({solve_subst(c, i, true)}, SolveMode::SubstKeep))
      return;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (chain_applicable(c, i, j) && search.offer({solve_chain(c, i, j)}, SolveMode::Chain))
        return;
}

void search_flex_rigid(const Clause& c, const ProofStep& step, const CheckOptions& options,
                       Search& search) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto info = flex_rigid_kind(c, i);
    if (!info) continue;
    if (step.binding) {
      if (step.binding_var && info->flex_var.name() != *step.binding_var) continue;
      try {
        if (search.offer({flex_rigid(c, i, *step.binding)})) return;
      } catch (const RuleError&) {
        // inadmissible at this literal; keep searching
      }
    } else {
      for (const Term& b : enumerate_bindings(c, i, options.helper_depth)) {
        try {
          if (search.offer({flex_rigid(c, i, b)})) return;
        } catch (const RuleError&) {
        }
      }
    }
  }
}

std::string describe_expected(const ProofStep& step) {
  std::string out;
  for (std::size_t k = 0; k < step.expected.size(); ++k) {
    if (k) out += " ; ";
    out += step.expected[k].show();
  }
  return out;
}

}  // namespace

bool check_step(std::map<std::string, Clause>& state, const ProofStep& step, StepResult& out,
                const CheckOptions& options) {
  out = StepResult{};
  out.ids = step.ids;
  out.rule = step.rule;
  out.starred = step.starred;
  out.premises = step.premises;
  out.line = step.line;

  auto fail = [&](const std::string& why) {
    out.verified = false;
    out.failure = why;
    return false;
  };

  std::vector<Clause> premises;
  premises.reserve(step.premises.size());
  for (const std::string& id : step.premises) {
    auto it = state.find(id);
    if (it == state.end()) return fail("unknown premise '" + id + "'");
    premises.push_back(it->second);
  }
  std::size_t want = step.rule == Rule::Res ? 2 : 1;
  if (premises.size() != want)
    return fail(rule_name(step.rule) + " takes " + std::to_string(want) + " premise(s), got " +
                std::to_string(premises.size()));
  if (step.starred && step.rule != Rule::Dec && step.rule != Rule::Triv)
    return fail("iteration '*' is only supported for Dec and Triv");
  if (step.binding && step.rule != Rule::FlexRig)
    return fail("only FlexRig steps take a binding");
  if (step.expected.size() != 1 && step.rule != Rule::Cnf)
    return fail(rule_name(step.rule) + " yields one clause, step declares " +
                std::to_string(step.expected.size()) + " ids");

  Search search(step.expected);
  const Clause& p0 = premises[0];
  std::size_t star = step.starred ? options.max_star_iterations : 1;

  try {
    switch (step.rule) {
      case Rule::Res: {
        const Clause& p1 = premises[1];
        for (std::size_t i = 0; i < p0.size() && !search.found; ++i)
          for (std::size_t j = 0; j < p1.size() && !search.found; ++j)
            if (p0[i].positive() != p1[j].positive()) search.offer({resolve(p0, i, p1, j)});
        break;
      }
      case Rule::Dec:
        search_iterated(
            p0, star, search, dec_positions,
            [](const Clause& c, std::size_t i) { return decompose(c, i); });
        break;
      case Rule::Triv:
        search_iterated(
            p0, star, search, triv_positions,
            [](const Clause& c, std::size_t i) { return trivial(c, i); });
        break;
      case Rule::Solve:
        search_solve(p0, search);
        break;
      case Rule::FlexRig:
        search_flex_rigid(p0, step, options, search);
        break;
      case Rule::Fac: {
        for (std::size_t i = 0; i < p0.size() && !search.found; ++i)
          for (std::size_t j = 0; j < p0.size() && !search.found; ++j)
            if (i != j && p0[i].positive() == p0[j].positive()) search.offer({factor(p0, i, j)});
        break;
      }
      case Rule::Equiv: {
        for (std::size_t i = 0; i < p0.size() && !search.found; ++i) {
          const Literal& lit = p0[i];
          if (lit.negative() && lit.is_equation() && lit.lhs().type().is_o())
            search.offer({equiv(p0, i)});
        }
        break;
      }
      case Rule::Cnf: {
        bool any = false;
        for (std::size_t i = 0; i < p0.size(); ++i)
          if (p0[i].atom().has_connective_head()) any = true;
        if (!any) return fail("Cnf premise has no literal with a top connective");
        search.offer(cnf_all(p0));
        break;
      }
    }
  } catch (const RuleError& e) {
    return fail(std::string("rule error: ") + e.what());
  }

  if (!search.found) {
    std::string why =
        "no " + rule_name(step.rule) + " parameterization yields the expected clause(s)";
    why += "\n    expected: " + describe_expected(step);
    if (!search.nearest.empty()) {
      why += "\n    nearest:  ";
      for (std::size_t k = 0; k < search.nearest.size(); ++k) {
        if (k) why += " ; ";
        why += search.nearest[k].show();
      }
    }
    return fail(why);
  }

  out.verified = true;
  out.mode = search.mode;
  out.iterations = search.iterations;
  out.derived = step.expected;
  for (std::size_t k = 0; k < step.ids.size(); ++k)
    state.emplace(step.ids[k], step.expected[k].with_id(step.ids[k]));
  return true;
}

int CheckReport::exit_code() const {
  switch (verdict) {
    case Verdict::Proved: return 0;
    case Verdict::NoGoal: return 1;
    case Verdict::Failed: return 2;
  }
  return 2;
}

CheckReport check_script(const ProofScript& script, const CheckOptions& options) {
  CheckReport report;
  std::map<std::string, Clause> state;
  for (const Clause& c : script.problem.clauses) state.emplace(c.id(), c);

  bool all_ok = true;
  for (std::size_t s = 0; s < script.steps.size(); ++s) {
    StepResult sr;
    bool ok = check_step(state, script.steps[s], sr, options);
    if (ok) {
      report.derived_count += sr.derived.size();
      if (sr.mode == SolveMode::Chain) report.chain_steps.push_back(sr.ids.front());
    }
    report.steps.push_back(std::move(sr));
    if (!ok) {
      all_ok = false;
      report.failed_step = s;
      report.failure = report.steps.back().failure;
      report.failed_line = script.steps[s].line;
      break;
    }
  }

  if (!all_ok)
    report.verdict = CheckReport::Verdict::Failed;
  else if (!script.steps.empty() && script.steps.back().expects_empty())
    report.verdict = CheckReport::Verdict::Proved;
  else
    report.verdict = CheckReport::Verdict::NoGoal;
  return report;
}

// --- rendering ---------------------------------------------------------------

namespace {

std::string rule_cell(const StepResult& sr) {
  std::string out = rule_name(sr.rule) + (sr.starred ? "*" : "") + "(";
  for (std::size_t k = 0; k < sr.premises.size(); ++k) {
    if (k) out += ", ";
    out += sr.premises[k];
  }
  return out + ")";
}

std::string status_cell(const StepResult& sr) {
  if (!sr.verified) return "FAILED";
  std::string out = "ok";
  if (sr.mode) out += " [" + solve_mode_name(*sr.mode) + "]";
  if (sr.iterations > 1) out += " (" + std::to_string(sr.iterations) + "x)";
  return out;
}

void pad(std::string& s, std::size_t width) {
  while (s.size() < width) s += ' ';
}

}  // namespace

std::string show_report(const ProofScript& script, const CheckReport& report) {
  struct Row {
    std::string id, rule, status, clause;
  };
  std::vector<Row> rows;
  for (const Clause& c : script.problem.clauses)
    rows.push_back(Row{c.id(), "input", "", c.show()});
  for (const StepResult& sr : report.steps) {
    if (!sr.verified) {
      rows.push_back(Row{sr.ids.front(), rule_cell(sr), status_cell(sr), ""});
      continue;
    }
    for (std::size_t k = 0; k < sr.derived.size(); ++k)
      rows.push_back(Row{sr.ids[k], k == 0 ? rule_cell(sr) : "", k == 0 ? status_cell(sr) : "",
                         sr.derived[k].show()});
  }

  std::size_t wid = 2, wrule = 5, wstatus = 2;
  for (const Row& r : rows) {
    wid = std::max(wid, r.id.size());
    wrule = std::max(wrule, r.rule.size());
    wstatus = std::max(wstatus, r.status.size());
  }

  std::ostringstream out;
  out << "script: " << script.name << "\n";
  out << "problem: " << (script.problem_ref.empty() ? script.problem.source : script.problem_ref)
      << " (" << script.problem.clauses.size() << " input clauses)\n\n";
  for (const Row& r : rows) {
    std::string id = r.id, rule = r.rule, status = r.status;
    pad(id, wid + 2);
    pad(rule, wrule + 2);
    pad(status, wstatus + 2);
    out << "  " << id << rule << status << r.clause << "\n";
  }
  out << "\n";

  switch (report.verdict) {
    case CheckReport::Verdict::Proved:
      out << "verified: refutation reached the empty clause\n";
      break;
    case CheckReport::Verdict::NoGoal:
      out << "verified: all steps check, no empty clause derived\n";
      break;
    case CheckReport::Verdict::Failed:
      out << "FAILED at step " << report.steps.back().ids.front() << " (line "
          << report.failed_line << "): " << report.failure << "\n";
      break;
  }
  if (report.verdict != CheckReport::Verdict::Failed) {
    out << "steps: " << report.steps.size() << " verified, " << report.derived_count
        << " clauses derived\n";
    out << "chain-mode Solve steps: " << report.chain_steps.size();
    if (!report.chain_steps.empty()) {
      out << " (";
      for (std::size_t k = 0; k < report.chain_steps.size(); ++k) {
        if (k) out << ", ";
        out << report.chain_steps[k];
      }
      out << ")";
    }
    out << "\n";
  }
  return out.str();
}

std::string show_report_machine(const CheckReport& report) {
  std::ostringstream out;
  for (const StepResult& sr : report.steps) {
    std::string ids;
    for (std::size_t k = 0; k < sr.ids.size(); ++k) {
      if (k) ids += ",";
      ids += sr.ids[k];
    }
    out << ids << " " << rule_name(sr.rule) << " " << (sr.verified ? "verified" : "failed");
    if (sr.mode) out << " " << solve_mode_name(*sr.mode);
    out << "\n";
  }
  return out.str();
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const ProofScript& script) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(script.name.empty() ? "proof" : script.name) << "\" {\n";
  out << "  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const Clause& c : script.problem.clauses)
    out << "  \"" << dot_escape(c.id()) << "\" [label=\"" << dot_escape(c.id() + ": " + c.show())
        << "\"];\n";
  for (const ProofStep& step : script.steps)
    for (std::size_t k = 0; k < step.ids.size(); ++k)
      out << "  \"" << dot_escape(step.ids[k]) << "\" [label=\""
          << dot_escape(step.ids[k] + ": " + step.expected[k].show()) << "\"];\n";
  for (const ProofStep& step : script.steps)
    for (const std::string& premise : step.premises)
      for (const std::string& id : step.ids)
        out << "  \"" << dot_escape(premise) << "\" -> \"" << dot_escape(id) << "\" [label=\""
            << rule_name(step.rule) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace erue
