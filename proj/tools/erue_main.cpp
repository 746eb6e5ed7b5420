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

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "erue/checker.hpp"
#include "erue/error.hpp"
#include "erue/parse.hpp"
#include "erue/prover.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitProved = 0;
constexpr int kExitNoGoal = 1;
constexpr int kExitStepFailure = 2;
constexpr int kExitInputError = 3;

erue::ProofScript obtain_script(const std::string& path, const std::string& builtin) {
  if (!builtin.empty()) return erue::builtin_script(builtin);
  return erue::load_script(fs::path(path));
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw erue::Error("cannot write file: " + path.string());
  out << text;
}

int run_check(const std::string& path, const std::string& builtin, bool machine) {
  erue::ProofScript script = obtain_script(path, builtin);
  erue::CheckReport report = erue::check_script(script);
  if (machine)
    std::cout << erue::show_report_machine(report);
  else
    std::cout << erue::show_report(script, report);
  return report.exit_code();
}

int run_prove(const std::string& path, bool fo, const std::string& hints_path,
              std::size_t max_clauses, std::size_t max_weight, std::size_t max_depth,
              std::size_t helper_depth, double time_seconds, std::string out_path) {
  erue::Problem problem = erue::load_problem(path);

  erue::ModeConfig mode;
  mode.mode = fo ? erue::ProverMode::FirstOrderRestricted : erue::ProverMode::HigherOrder;
  if (!hints_path.empty()) mode.hints = erue::load_hints(hints_path, problem.signature);

  erue::SearchLimits limits;
  limits.max_generated = max_clauses;
  limits.max_weight = max_weight;
  limits.max_depth = max_depth;
  limits.helper_depth = helper_depth;
  limits.time_seconds = time_seconds;

  erue::SaturationReport report = erue::prove(problem, mode, limits);

  std::cout << "problem: " << path << " (" << problem.clauses.size() << " clauses)\n";
  std::cout << "limits: max-clauses " << limits.max_generated << ", max-weight "
            << limits.max_weight << ", max-depth " << limits.max_depth << ", helper-depth "
            << limits.helper_depth << ", time " << limits.time_seconds << "s\n";
  if (!mode.hints.empty()) std::cout << "hints: " << mode.hints.size() << "\n";
  std::cout << report.show();

  if (report.script) {
    if (out_path.empty()) out_path = fs::path(path).stem().string() + ".proof.ers";
    erue::ProofScript script = *report.script;
    // Reference the problem relative to where the script lands, so the
    // emitted file is checkable as written.
    fs::path out_dir = fs::absolute(fs::path(out_path)).parent_path();
    std::error_code ec;
    fs::path rel = fs::relative(fs::absolute(path), out_dir, ec);
    script.problem_ref = ec ? fs::absolute(path).string() : rel.string();
    write_text(out_path, erue::show_script(script));
    std::cout << "script written to " << out_path << "\n";
  }
  return report.refuted() ? kExitProved : kExitNoGoal;
}

int run_export_dot(const std::string& path, const std::string& builtin,
                   const std::string& out_path) {
  erue::ProofScript script = obtain_script(path, builtin);
  erue::CheckReport report = erue::check_script(script);
  if (report.verdict == erue::CheckReport::Verdict::Failed) {
    std::cerr << "script does not verify: " << report.failure << "\n";
    return kExitStepFailure;
  }
  std::string dot = erue::to_dot(script);
  if (out_path.empty())
    std::cout << dot;
  else
    write_text(out_path, dot);
  return kExitProved;
}

int run_show(const std::string& path, const std::string& builtin) {
  if (!builtin.empty()) {
    std::cout << erue::show_script(erue::builtin_script(builtin));
    return 0;
  }
  fs::path p(path);
  if (p.extension() == ".ers") {
    std::cout << erue::show_script(erue::load_script(p));
    return 0;
  }
  erue::Problem problem = erue::load_problem(p);
  for (const auto& [name, ty] : problem.signature)
    std::cout << "const " << name << " : " << ty.show() << ".\n";
  for (const erue::Clause& c : problem.clauses)
    std::cout << "clause " << c.id() << " : " << c.show() << ".\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"erue: kernel, script checker and bounded prover for extensional "
               "higher-order RUE resolution"};
  app.require_subcommand(1);

  std::string script_path, builtin, problem_path, hints_path, out_path;
  bool machine = false, fo = false;
  std::size_t max_clauses = 10000, max_weight = 80, max_depth = 50, helper_depth = 1;
  double time_seconds = 60.0;

  CLI::App* check = app.add_subcommand("check", "verify a proof script step by step");
  check->add_option("script", script_path, "script file (.ers)");
  check->add_option("--builtin", builtin, "bundled script: ref1 or ref2");
  check->add_flag("--machine", machine, "one machine-readable line per step");

  CLI::App* prove = app.add_subcommand("prove", "run bounded saturation on a problem");
  prove->add_option("problem", problem_path, "problem file (.erp)")->required();
  prove->add_flag("--fo", fo, "first-order-restricted rule set");
  prove->add_option("--hints", hints_path, "hint file with FlexRig binding templates");
  prove->add_option("--max-clauses", max_clauses, "generated-clause limit");
  prove->add_option("--max-weight", max_weight, "per-clause symbol-count limit");
  prove->add_option("--depth", max_depth, "derivation depth limit");
  prove->add_option("--helper-depth", helper_depth, "FlexRig binding enumeration depth");
  prove->add_option("--time", time_seconds, "wall-clock budget in seconds");
  prove->add_option("--out", out_path, "where to write the refutation script");

  CLI::App* exportdot = app.add_subcommand("export-dot", "emit a proof DAG as DOT");
  exportdot->add_option("script", script_path, "script file (.ers)");
  exportdot->add_option("--builtin", builtin, "bundled script: ref1 or ref2");
  exportdot->add_option("--out", out_path, "output file (stdout when omitted)");

  CLI::App* show = app.add_subcommand("show", "parse and reprint a problem or script");
  show->add_option("file", script_path, "problem (.erp) or script (.ers) file");
  show->add_option("--builtin", builtin, "bundled script: ref1 or ref2");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      if (script_path.empty() && builtin.empty())
        throw erue::Error("check needs a script path or --builtin");
      return run_check(script_path, builtin, machine);
    }
    if (prove->parsed())
      return run_prove(problem_path, fo, hints_path, max_clauses, max_weight, max_depth,
                       helper_depth, time_seconds, out_path);
    if (exportdot->parsed()) {
      if (script_path.empty() && builtin.empty())
        throw erue::Error("export-dot needs a script path or --builtin");
      return run_export_dot(script_path, builtin, out_path);
    }
    if (show->parsed()) {
      if (script_path.empty() && builtin.empty())
        throw erue::Error("show needs a file path or --builtin");
      return run_show(script_path, builtin);
    }
  } catch (const erue::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const erue::TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const erue::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}
