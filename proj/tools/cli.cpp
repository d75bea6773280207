// Copyright 2026 The lealc Authors
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

#include "cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lealc/extraction.hpp"
#include "lealc/model_io.hpp"
#include "lealc/oracle.hpp"
#include "lealc/parser.hpp"
#include "lealc/tableau.hpp"
#include "lealc/tbox.hpp"

namespace lealc::cli {

namespace {

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::size_t env_max_steps() {
  const char* v = std::getenv("LE_ALC_MAX_STEPS");
  if (!v || !*v) return 0;
  try {
    return static_cast<std::size_t>(std::stoull(v));
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

CheckResult check_file(const std::string& path, const CheckFlags& flags, std::ostream& out, std::ostream& err) {
  CheckResult result;
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&](int code, std::string line) {
    result.exit_code = code;
    result.verdict_line = std::move(line);
    result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
  };

  std::string text;
  if (!read_file(path, text)) {
    err << path << ": cannot read file\n";
    return finish(kUsageError, "cannot read file");
  }
  KnowledgeBase kb;
  try {
    kb = parse_kb(text);
  } catch (const ParseError& e) {
    err << path << ": " << e.what() << "\n";
    return finish(kUsageError, e.what());
  }
  PreparedKb prepared;
  try {
    prepared = prepare(kb);
  } catch (const TboxError& e) {
    err << path << ": " << (e.line() ? "line " + std::to_string(e.line()) + ": " : "") << "tbox rejected: " << e.what()
        << "\n";
    return finish(kTboxRejected, e.what());
  }

  if (flags.unravel_only) {
    KnowledgeBase flat;
    flat.declarations = kb.declarations;
    flat.declarations.concepts.insert(prepared.fresh_atoms.begin(), prepared.fresh_atoms.end());
    flat.abox = prepared.abox;
    out << write_kb(flat);
    return finish(kConsistent, "unravelled");
  }

  Vocabulary vocab{kb.declarations.roles(), kb.declarations.concepts};
  vocab.atoms.insert(prepared.fresh_atoms.begin(), prepared.fresh_atoms.end());
  for (const TboxDefinition& d : prepared.definitions) vocab.atoms.erase(d.lhs);
  TableauOptions options;
  options.max_steps = flags.max_steps ? flags.max_steps : env_max_steps();

  Verdict verdict;
  try {
    verdict = check_consistency(prepared.abox, vocab, options);
  } catch (const SafetyLimitError& e) {
    err << path << ": internal error: " << e.what() << "\n";
    return finish(kInternalError, e.what());
  }
  const Tableau& t = *verdict.tableau;
  result.steps = t.steps();
  result.terms = t.size();

  std::string line;
  if (verdict.status == Status::Inconsistent) {
    line = "inconsistent (clash: " + to_string(verdict.clash->first) + " / " + to_string(verdict.clash->second) + ")";
  } else {
    line = "consistent";
    const Report check = verify_extraction(t, *verdict.model);
    if (!check.ok()) {
      err << path << ": internal error: extracted model failed verification\n";
      for (const auto& v : check.violations) err << "  " << v << "\n";
      return finish(kInternalError, "model verification failed");
    }
  }
  out << line << "\n";

  if (!flags.model_out.empty()) {
    if (verdict.model) {
      Interpretation model = *verdict.model;
      extend_with_definitions(model, prepared.definitions);
      if (!write_file(flags.model_out, model_to_json(model).dump(2) + "\n")) {
        err << flags.model_out << ": cannot write model\n";
        return finish(kUsageError, "cannot write model");
      }
    } else {
      err << "no model written: the ABox is inconsistent\n";
    }
  }
  if (!flags.trace_out.empty() && !write_file(flags.trace_out, trace_to_json(t).dump(2) + "\n")) {
    err << flags.trace_out << ": cannot write trace\n";
    return finish(kUsageError, "cannot write trace");
  }

  if (flags.stats) {
    const AboxDepths d = abox_depths(prepared.abox);
    const std::size_t bound = termination_bound(prepared.abox);
    out << "steps: " << t.steps() << "\n"
        << "terms: " << t.size() << "\n"
        << "individuals: " << t.objects().size() << " objects, " << t.features().size() << " features\n"
        << "size: " << abox_size(prepared.abox) << "\n"
        << "depth: box " << d.box_depth << ", dia " << d.dia_depth << "\n"
        << "bound: " << bound << " (steps/bound " << std::fixed << std::setprecision(4)
        << (bound ? static_cast<double>(t.steps()) / static_cast<double>(bound) : 0.0) << ")\n"
        << "step limit: " << t.step_limit() << "\n"
        << "tbox: " << regime_name(prepared.regime) << "\n";
  }

  if (flags.oracle_max) {
    const OracleBounds bounds{flags.oracle_max, flags.oracle_max};
    try {
      const bool found = brute_force_consistent(prepared.abox, bounds).has_value();
      const bool consistent = verdict.status == Status::Consistent;
      // A consistent verdict already comes with a verified model, so an
      // empty search only says that no model is this small.
      const bool agree = found == consistent;
      const bool conflict = found && !consistent;
      out << "oracle: " << (found ? "model found" : "no model") << " within " << flags.oracle_max << "x"
          << flags.oracle_max << ", " << (agree ? "agrees" : conflict ? "DISAGREES" : "inconclusive") << "\n";
      if (conflict) {
        KnowledgeBase flat;
        flat.declarations = kb.declarations;
        flat.abox = prepared.abox;
        err << "oracle disagreement on:\n" << write_kb(flat);
        return finish(kInternalError, "oracle disagreement");
      }
    } catch (const BoundsError& e) {
      err << "oracle skipped: " << e.what() << "\n";
    }
  }
  return finish(verdict.status == Status::Consistent ? kConsistent : kInconsistent, line);
}

std::vector<BatchRow> batch(const std::vector<std::string>& paths, unsigned jobs) {
  std::vector<BatchRow> rows(paths.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < paths.size(); i = next++) {
      std::ostringstream out, err;
      const CheckResult r = check_file(paths[i], CheckFlags{}, out, err);
      rows[i] = {paths[i],
                 r.exit_code == kConsistent     ? "consistent"
                 : r.exit_code == kInconsistent ? "inconsistent"
                                                : "error",
                 r.steps, r.terms, r.wall_ms};
    }
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs && j < paths.size(); ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

void print_batch(const std::vector<BatchRow>& rows, std::ostream& out) {
  out << "file\tverdict\tsteps\tterms\twall_ms\n";
  for (const BatchRow& r : rows)
    out << r.file << '\t' << r.verdict << '\t' << r.steps << '\t' << r.terms << '\t' << std::fixed
        << std::setprecision(3) << r.wall_ms << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"lealc: consistency checking for LE-ALC knowledge bases"};
  app.require_subcommand(1);

  std::string file;
  CheckFlags flags;
  auto* check = app.add_subcommand("check", "check one knowledge base");
  check->add_option("file", file, "knowledge base")->required();
  check->add_option("--model-out", flags.model_out, "write the extracted model as JSON");
  check->add_option("--trace", flags.trace_out, "write the rule trace as JSON");
  check->add_flag("--stats", flags.stats, "print run statistics");
  check->add_flag("--unravel-only", flags.unravel_only, "print the unravelled ABox and stop");
  check->add_option("--oracle-max", flags.oracle_max, "cross-check with exhaustive search up to N elements per sort");
  check->add_option("--max-steps", flags.max_steps, "rule application limit");

  std::vector<std::string> files;
  unsigned jobs = 1;
  auto* batch_cmd = app.add_subcommand("batch", "check many knowledge bases");
  batch_cmd->add_option("files", files, "knowledge bases");
  batch_cmd->add_option("-j,--jobs", jobs, "parallel checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsageError;
  }

  if (check->parsed()) return check_file(file, flags, out, err).exit_code;
  print_batch(batch(files, jobs), out);
  return 0;
}

}  // namespace lealc::cli
