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

#include "erue/prover.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "erue/error.hpp"
#include "erue/rules.hpp"

namespace erue {

namespace {

using Clock = std::chrono::steady_clock;

struct StoredClause {
  Clause clause;
  std::size_t weight = 0;
  std::size_t depth = 0;
  long inference = -1;  // -1: input clause
  std::size_t position = 0;
};

struct StoredInference {
  Rule rule;
  std::vector<std::size_t> premises;
  std::optional<Term> binding;
  std::optional<std::string> binding_var;
  std::vector<Clause> produced;  // all results, duplicates included
};

class Saturation {
 public:
  Saturation(const Problem& problem, const ModeConfig& mode, const SearchLimits& limits)
      : problem_(problem), mode_(mode), limits_(limits) {
    report_.mode = mode.mode;
    deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(limits.time_seconds));
  }

  SaturationReport run() {
    for (const Clause& c : problem_.clauses) {
      if (is_duplicate(c)) continue;
      insert(c, 0, -1, 0);
      if (c.empty()) {
        finish_refuted(store_.size() - 1);
        return report_;
      }
    }

    while (!done_ && !unprocessed_.empty()) {
      if (Clock::now() > deadline_) {
        exhaust("time");
        break;
      }
      auto it = unprocessed_.begin();
      std::size_t given = it->second;
      unprocessed_.erase(it);
      processed_.push_back(given);
      infer_from(given);
    }

    if (!done_) {
      report_.outcome = SaturationReport::Outcome::Saturated;
      done_ = true;
    }
    report_.generated = generated_;
    report_.kept = store_.size();
    report_.processed = processed_.size();
    return report_;
  }

 private:
  bool higher_order() const { return mode_.mode == ProverMode::HigherOrder; }

  void exhaust(const std::string& what) {
    if (done_) return;
    done_ = true;
    report_.outcome = SaturationReport::Outcome::LimitExhausted;
    report_.limit_hit = what;
  }

  bool is_duplicate(const Clause& c) {
    for (std::size_t idx : buckets_[variant_signature(c)])
      if (variant_equal(store_[idx].clause, c)) return true;
    return false;
  }

  void insert(const Clause& c, std::size_t depth, long inference, std::size_t position) {
    std::size_t idx = store_.size();
    std::size_t weight = c.weight();
    store_.push_back(StoredClause{c, weight, depth, inference, position});
    buckets_[variant_signature(c)].push_back(idx);
    unprocessed_.insert({weight, idx});
  }

  // Records one inference and feeds its results through the limits. The
  // inference is stored lazily, only once a result is actually kept. Returns
  // false when the search must stop (empty clause or a limit).
  bool emit(Rule rule, std::vector<std::size_t> premises, std::optional<Term> binding,
            std::optional<std::string> binding_var, std::vector<Clause> results) {
    if (done_) return false;
    std::size_t depth = 1;
    for (std::size_t p : premises) depth = std::max(depth, store_[p].depth + 1);
    long inf = -1;
    for (std::size_t pos = 0; pos < results.size(); ++pos) {
      ++generated_;
      const Clause& r = results[pos];
      bool admissible =
          r.weight() <= limits_.max_weight && depth <= limits_.max_depth && !is_duplicate(r);
      if (admissible) {
        if (inf < 0) {
          inf = static_cast<long>(inferences_.size());
          inferences_.push_back(StoredInference{rule, premises, binding, binding_var, results});
        }
        insert(r, depth, inf, pos);
        if (r.empty()) {
          finish_refuted(store_.size() - 1);
          return false;
        }
      }
      if (generated_ >= limits_.max_generated) {
        exhaust("max-clauses");
        return false;
      }
    }
    return true;
  }

  void note_clash(const std::string& a, const std::string& b) {
    std::string key = a <= b ? a + "/" + b : b + "/" + a;
    ++report_.clash_counts[key];
  }

  void infer_from(std::size_t g) {
    const Clause c = store_[g].clause;  // copy: store_ may reallocate

    // Triv
    for (std::size_t i = 0; i < c.size() && !done_; ++i)
      if (trivial_applicable(c, i))
        if (!emit(Rule::Triv, {g}, {}, {}, {trivial(c, i)})) return;

    // Dec (collecting clash statistics as we go)
    for (std::size_t i = 0; i < c.size() && !done_; ++i) {
      std::string lh, rh;
      switch (dec_status(c, i, &lh, &rh)) {
        case DecStatus::Applicable:
          if (!emit(Rule::Dec, {g}, {}, {}, {decompose(c, i)})) return;
          break;
        case DecStatus::HeadClash:
        case DecStatus::TypeIndexClash:
          note_clash(lh, rh);
          break;
        default:
          break;
      }
    }

    // Solve, substitution readings
    for (std::size_t i = 0; i < c.size() && !done_; ++i) {
      if (!solve_binding(c, i)) continue;
      if (!emit(Rule::Solve, {g}, {}, {}, {solve_subst(c, i, false)})) return;
      if (!emit(Rule::Solve, {g}, {}, {}, {solve_subst(c, i, true)})) return;
    }

    // Fac
    for (std::size_t i = 0; i < c.size() && !done_; ++i)
      for (std::size_t j = 0; j < c.size() && !done_; ++j)
        if (i != j && c[i].positive() == c[j].positive())
          if (!emit(Rule::Fac, {g}, {}, {}, {factor(c, i, j)})) return;

    if (higher_order()) {
      // Solve, chain reading
      for (std::size_t i = 0; i < c.size() && !done_; ++i)
        for (std::size_t j = 0; j < c.size() && !done_; ++j)
          if (chain_applicable(c, i, j))
            if (!emit(Rule::Solve, {g}, {}, {}, {solve_chain(c, i, j)})) return;

      // Equiv
      for (std::size_t i = 0; i < c.size() && !done_; ++i) {
        const Literal& lit = c[i];
        if (lit.negative() && lit.is_equation() && lit.lhs().type().is_o())
          if (!emit(Rule::Equiv, {g}, {}, {}, {equiv(c, i)})) return;
      }

      // Cnf closure
      bool connective = false;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].atom().has_connective_head()) connective = true;
      if (connective && !done_)
        if (!emit(Rule::Cnf, {g}, {}, {}, cnf_all(c))) return;

      // FlexRig: hint templates first, then enumeration
      for (std::size_t i = 0; i < c.size() && !done_; ++i) {
        auto info = flex_rigid_kind(c, i);
        if (!info) continue;
        std::vector<Term> bindings;
        for (const Hint& hint : mode_.hints) {
          auto b = instantiate_hint(hint.var, hint.pattern, info->flex_var, c);
          if (b) bindings.push_back(*b);
        }
        for (Term& b : enumerate_bindings(c, i, limits_.helper_depth))
          bindings.push_back(std::move(b));
        for (const Term& b : bindings) {
          try {
            Clause r = flex_rigid(c, i, b);
            if (!emit(Rule::FlexRig, {g}, b, info->flex_var.name(), {r})) return;
          } catch (const RuleError&) {
            // inadmissible binding shape, skip
          }
        }
      }
    }

    // Res with every processed clause, both premise orders.
    for (std::size_t pi = 0; pi < processed_.size() && !done_; ++pi) {
      std::size_t p = processed_[pi];
      const Clause d = store_[p].clause;
      for (std::size_t i = 0; i < c.size() && !done_; ++i)
        for (std::size_t j = 0; j < d.size() && !done_; ++j) {
          if (c[i].positive() == d[j].positive()) continue;
          if (!emit(Rule::Res, {g, p}, {}, {}, {resolve(c, i, d, j)})) return;
          if (p != g)
            if (!emit(Rule::Res, {p, g}, {}, {}, {resolve(d, j, c, i)})) return;
        }
    }
  }

  // --- script emission ------------------------------------------------------

  void finish_refuted(std::size_t empty_idx) {
    done_ = true;
    report_.outcome = SaturationReport::Outcome::Refuted;

    // Ancestor inferences of the empty clause, in generation order.
    std::set<long> needed;
    std::vector<std::size_t> stack{empty_idx};
    std::set<std::size_t> seen;
    while (!stack.empty()) {
      std::size_t idx = stack.back();
      stack.pop_back();
      if (!seen.insert(idx).second) continue;
      long inf = store_[idx].inference;
      if (inf < 0) continue;
      needed.insert(inf);
      for (std::size_t p : inferences_[inf].premises) stack.push_back(p);
    }

    // Fresh derived ids, avoiding the input ids.
    std::set<std::string> used;
    for (const Clause& c : problem_.clauses) used.insert(c.id());
    std::size_t counter = 0;
    auto next_id = [&]() {
      std::string id;
      do {
        id = "D" + std::to_string(++counter);
      } while (used.count(id));
      used.insert(id);
      return id;
    };

    std::map<long, std::vector<std::string>> ids;  // inference -> ids of its results
    ProofScript script;
    script.name = "derived refutation";
    script.problem = problem_;
    script.problem_ref = problem_.source;

    auto id_of = [&](std::size_t idx) -> std::string {
      const StoredClause& sc = store_[idx];
      if (sc.inference < 0) return sc.clause.id();
      return ids.at(sc.inference)[sc.position];
    };

    for (long inf : needed) {
      const StoredInference& si = inferences_[inf];
      std::vector<std::string>& my_ids = ids[inf];
      for (std::size_t k = 0; k < si.produced.size(); ++k) my_ids.push_back(next_id());

      ProofStep step;
      step.ids = my_ids;
      step.rule = si.rule;
      for (std::size_t p : si.premises) step.premises.push_back(id_of(p));
      step.binding = si.binding;
      step.binding_var = si.binding_var;
      for (std::size_t k = 0; k < si.produced.size(); ++k)
        step.expected.push_back(si.produced[k].with_id(my_ids[k]));
      script.steps.push_back(std::move(step));
    }
    report_.script = std::move(script);
  }

  const Problem& problem_;
  ModeConfig mode_;
  SearchLimits limits_;

  std::vector<StoredClause> store_;
  std::vector<StoredInference> inferences_;
  std::map<std::string, std::vector<std::size_t>> buckets_;
  std::set<std::pair<std::size_t, std::size_t>> unprocessed_;  // (weight, idx)
  std::vector<std::size_t> processed_;
  std::size_t generated_ = 0;
  bool done_ = false;
  Clock::time_point deadline_;
  SaturationReport report_;
};

}  // namespace

SaturationReport prove(const Problem& problem, const ModeConfig& mode,
                       const SearchLimits& limits) {
  for (const Clause& c : problem.clauses)
    for (const Literal& lit : c.literals()) check_type(lit.atom());
  Saturation s(problem, mode, limits);
  return s.run();
}

SaturationReport fo_exhaustion_report(const Problem& problem, const SearchLimits& limits) {
  ModeConfig mode;
  mode.mode = ProverMode::FirstOrderRestricted;
  return prove(problem, mode, limits);
}

std::string SaturationReport::show() const {
  std::ostringstream out;
  out << "mode: "
      << (mode == ProverMode::HigherOrder ? "higher-order" : "first-order-restricted")
      << " (sequential)\n";
  switch (outcome) {
    case Outcome::Refuted:
      out << "outcome: refutation found\n";
      break;
    case Outcome::LimitExhausted:
      out << "outcome: no refutation within limits (" << limit_hit << ")\n";
      break;
    case Outcome::Saturated:
      out << "outcome: saturated without refutation\n";
      break;
  }
  out << "generated " << generated << ", kept " << kept << ", processed " << processed << "\n";
  if (!clash_counts.empty()) {
    out << "head-clash dead ends:";
    for (const auto& [key, count] : clash_counts) out << " " << key << " " << count;
    out << "\n";
  }
  if (script) out << "refutation script: " << script->steps.size() << " steps\n";
  return out.str();
}

}  // namespace erue
