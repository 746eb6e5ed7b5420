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

#ifndef ERUE_PROVER_HPP
#define ERUE_PROVER_HPP

#include <map>
#include <optional>
#include <string>

#include "erue/script.hpp"

namespace erue {

struct SearchLimits {
  std::size_t max_generated = 10000;  // clauses produced, duplicates included
  std::size_t max_weight = 80;        // symbol count per clause
  std::size_t helper_depth = 1;       // FlexRig binding enumeration depth
  std::size_t max_depth = 50;         // derivation depth
  double time_seconds = 60.0;         // wall clock budget
};

enum class ProverMode { HigherOrder, FirstOrderRestricted };

// First-order-restricted mode disables flex_rigid, equiv, cnf and
// solve_chain; the occurs-check in solve_subst always applies. It is a
// deliberately coarse approximation of a first-order RUE prover, kept only
// to contrast with the higher-order mode.
struct ModeConfig {
  ProverMode mode = ProverMode::HigherOrder;
  std::vector<Hint> hints;  // binding templates tried before enumeration
};

struct SaturationReport {
  enum class Outcome { Refuted, LimitExhausted, Saturated };

  Outcome outcome = Outcome::Saturated;
  std::string limit_hit;  // which limit ended the search, when exhausted
  std::size_t generated = 0;
  std::size_t kept = 0;
  std::size_t processed = 0;
  // Decomposition attempts rejected because two rigid heads differ,
  // keyed "h1/h2" with h1 <= h2. The characteristic dead end of the
  // first-order mode on the bundled problem.
  std::map<std::string, std::size_t> clash_counts;
  ProverMode mode = ProverMode::HigherOrder;
  std::optional<ProofScript> script;  // on success; verifies under check_script

  bool refuted() const { return outcome == Outcome::Refuted; }
  // Deterministic text: no timings, no paths.
  std::string show() const;
};

// Given-clause saturation: repeatedly picks the lightest unprocessed clause
// (symbol-count weight, FIFO tie-break), generates every applicable inference
// with the processed set, discards variants of kept clauses, and stops on the
// empty clause or a limit. On success the report carries a replayable script
// of the ancestors of [].
SaturationReport prove(const Problem& problem, const ModeConfig& mode,
                       const SearchLimits& limits);

// prove() in first-order-restricted mode.
SaturationReport fo_exhaustion_report(const Problem& problem, const SearchLimits& limits);

}  // namespace erue

#endif  // ERUE_PROVER_HPP
