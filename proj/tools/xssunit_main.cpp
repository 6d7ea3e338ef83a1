// Copyright 2026 The xssunit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// xssunit: generate XSS attack strings and run security unit tests against
// encoded sink templates.
//
// Exit status: 0 all safe, 2 at least one vulnerable verdict, 1 usage or
// configuration error. Standard output carries only JSON / NDJSON.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xssunit/attack_fsm.hpp"
#include "xssunit/error.hpp"
#include "xssunit/harness.hpp"
#include "xssunit/machine_config.hpp"
#include "xssunit/report.hpp"

namespace fs = std::filesystem;
using namespace xssunit;

namespace {

constexpr int kExitSafe = 0;
constexpr int kExitError = 1;
constexpr int kExitVulnerable = 2;

struct Common {
  std::string machine_path;
  std::string output;
};

StateMachine machine_for(const Common& common) {
  return common.machine_path.empty() ? default_machine() : load_machine(common.machine_path);
}

// XSSUNIT_OUTPUT_DIR, when set, anchors relative output paths.
fs::path output_path(const std::string& output) {
  fs::path path(output);
  if (const char* dir = std::getenv("XSSUNIT_OUTPUT_DIR"); dir && *dir && path.is_relative()) {
    path = fs::path(dir) / path;
  }
  return path;
}

void emit(const Common& common, const std::string& text) {
  if (common.output.empty() || common.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  auto path = output_path(common.output);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
}

std::vector<ContextKind> parse_kinds(const std::vector<std::string>& names) {
  if (names.empty()) return {kAllContextKinds.begin(), kAllContextKinds.end()};
  std::vector<ContextKind> kinds;
  for (const auto& n : names) {
    auto kind = parse_context_kind(n);
    if (!kind) throw Error(ErrorCode::kUnknownContext, "unknown context '" + n + "'");
    kinds.push_back(*kind);
  }
  return kinds;
}

RunMode parse_mode(const std::string& mode) {
  if (mode == "stop-first") return RunMode::StopFirst;
  if (mode == "exhaustive") return RunMode::Exhaustive;
  throw Error(ErrorCode::kInvalidTemplate, "unknown mode '" + mode + "'");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Security unit tests for output encoders: attack generation and evaluation"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--machine", common.machine_path, "Attack machine config (JSON)");
    cmd->add_option("-o,--output", common.output, "Write output here instead of stdout");
  };

  std::vector<std::string> contexts;
  std::string payload(kDefaultPayload);
  std::string sentinel(kDefaultSentinel);
  std::string mode = "stop-first";
  std::string encoders;
  bool legacy = false;
  bool no_legacy = false;
  bool all_contexts = false;
  std::string target;

  auto* gen = app.add_subcommand("generate", "Write every attack string as NDJSON");
  add_common(gen);
  gen->add_option("--context", contexts, "attr, content, js (repeatable; default all)");
  gen->add_option("--payload", payload, "JavaScript statement to embed");
  gen->add_flag("--no-legacy", no_legacy, "Drop IE-era attacks");

  auto add_run = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode, "stop-first or exhaustive")
        ->check(CLI::IsMember({"stop-first", "exhaustive"}));
    cmd->add_option("--payload", payload, "Attack payload");
    cmd->add_option("--sentinel", sentinel, "Function whose call proves execution");
    cmd->add_flag("--legacy", legacy, "Model IE-era parsing quirks");
    cmd->add_flag("--all-contexts", all_contexts, "Generate for all start contexts");
  };

  auto* test = app.add_subcommand("test", "Run one sink template");
  add_common(test);
  add_run(test);
  test->add_option("template", target, "Template .html file")->required();
  test->add_option("--encoders", encoders, "Comma-separated chain, applied left to right");

  auto* suite = app.add_subcommand("suite", "Run every template in a directory");
  add_common(suite);
  add_run(suite);
  suite->add_option("dir", target, "Directory of .html templates")->required();

  auto* corpus = app.add_subcommand("corpus", "Map a corpus of known attacks onto generated ones");
  add_common(corpus);
  corpus->add_option("file", target, "One attack per line")->required();
  corpus->add_option("--context", contexts, "Contexts to generate (default all)");
  corpus->add_option("--payload", payload, "Attack payload");

  auto* machine_cmd = app.add_subcommand("machine", "Print the attack machine config");
  add_common(machine_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const StateMachine machine = machine_for(common);

    if (*gen) {
      auto attacks = generate(machine, parse_kinds(contexts), payload);
      std::string out;
      std::size_t written = 0;
      for (std::size_t i = 0; i < attacks.size(); ++i) {
        if (no_legacy && attacks[i].legacy) continue;
        out += attack_record(attacks[i], i).dump(-1, ' ', false,
                                                 Json::error_handler_t::replace);
        out += '\n';
        ++written;
      }
      emit(common, out);
      std::cerr << "generated " << written << " attack strings\n";
      return kExitSafe;
    }

    RunOptions run;
    run.mode = parse_mode(mode);
    run.oracle.legacy = legacy;
    run.sentinel = sentinel;
    SuiteOptions suite_options{run, payload, all_contexts};

    if (*test) {
      SinkTemplate sink = load_template(target);
      if (!encoders.empty()) sink.chain = EncoderChain::parse(encoders);
      StartContext context = validate_template(sink, run.oracle);
      std::vector<ContextKind> kinds = {context.kind};
      if (all_contexts) kinds.assign(kAllContextKinds.begin(), kAllContextKinds.end());
      auto attacks = generate(machine, kinds, payload);
      Verdict verdict = run_unit_test(sink, attacks, run);

      Json doc;
      doc["schema_version"] = kReportSchemaVersion;
      doc["name"] = sink.name;
      doc["context"] = to_string(context);
      doc["chain"] = sink.chain.to_string();
      doc["verdict"] = verdict_to_json(verdict);
      emit(common, dump_report(doc));
      std::cerr << sink.name << ": " << (verdict.vulnerable ? "VULNERABLE" : "safe") << " after "
                << verdict.attacks_tried << " attacks (" << seconds_since(start) << " s)\n";
      return verdict.vulnerable ? kExitVulnerable : kExitSafe;
    }

    if (*suite) {
      auto entries = run_suite_dir(target, machine, suite_options);
      emit(common, dump_report(suite_report_to_json(entries)));
      bool any_vulnerable = false;
      bool any_error = false;
      for (const auto& e : entries) {
        if (e.verdict && e.verdict->vulnerable) any_vulnerable = true;
        if (e.error) {
          any_error = true;
          std::cerr << e.name << ": error: " << *e.error << "\n";
        }
      }
      std::cerr << entries.size() << " templates (" << seconds_since(start) << " s)\n";
      if (any_vulnerable) return kExitVulnerable;
      return any_error ? kExitError : kExitSafe;
    }

    if (*corpus) {
      auto entries = load_corpus(target);
      auto attacks = generate(machine, parse_kinds(contexts), payload);
      auto report = map_corpus(entries, attacks);
      emit(common, dump_report(corpus_report_to_json(report)));
      std::cerr << report.exact_matches << "/" << report.total << " exact, " << report.mapped
                << "/" << report.total << " mapped\n";
      return kExitSafe;
    }

    if (*machine_cmd) {
      emit(common, serialize_machine(machine));
      return kExitSafe;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
