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

#pragma once

// Security unit tests: a sink template (one tainted value, one encoder
// chain) is rendered with every generated attack and handed to the
// browser model. The encoder is vulnerable for the sink's context when
// some attack still executes after encoding.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xssunit/attack_fsm.hpp"
#include "xssunit/browser_oracle.hpp"
#include "xssunit/canonical.hpp"
#include "xssunit/encoders.hpp"

namespace xssunit {

struct SinkTemplate {
  std::string name;
  std::string html;  // contains kPlaceholder exactly once
  EncoderChain chain = EncoderChain::identity();
  std::optional<StartContext> declared_context;
  std::map<std::string, std::string> metadata;
};

// Checks the placeholder count and, when declared, that the declared
// context equals the detected one. Returns the detected context.
StartContext validate_template(const SinkTemplate& sink, OracleOptions options = {});

std::string render(const SinkTemplate& sink, std::string_view raw_value);

enum class RunMode { StopFirst, Exhaustive };

struct Verdict {
  bool vulnerable = false;
  // First successful attack, with the trace it produced.
  std::optional<AttackString> witness;
  std::optional<ExecutionTrace> trace;
  std::size_t attacks_tried = 0;
  // Indices into the attack list; exhaustive mode records every hit.
  std::vector<std::size_t> hits;
};

struct RunOptions {
  RunMode mode = RunMode::StopFirst;
  OracleOptions oracle;
  std::string sentinel = std::string(kDefaultSentinel);
};

// Throws std::invalid_argument on an empty attack list and std::logic_error
// if a witness fails to replay.
Verdict run_unit_test(const SinkTemplate& sink, std::span<const AttackString> attacks,
                      const RunOptions& options = {});

struct SuiteOptions {
  RunOptions run;
  std::string payload = std::string(kDefaultPayload);
  // Generate for all three start contexts instead of the detected one.
  bool all_contexts = false;
};

struct SuiteEntry {
  std::string name;
  std::optional<StartContext> context;
  std::optional<Verdict> verdict;
  std::optional<std::string> error;
  std::map<std::string, std::string> metadata;
};

std::vector<SuiteEntry> run_suite(std::span<const SinkTemplate> templates,
                                  const StateMachine& machine, const SuiteOptions& options = {});

struct CorpusReport {
  std::size_t total = 0;
  std::size_t exact_matches = 0;
  // Entries containing at least one generated string (includes exact).
  std::size_t mapped = 0;
  std::vector<std::string> unmapped;
};

CorpusReport map_corpus(std::span<const std::string> corpus,
                        std::span<const AttackString> generated);

// One attack per line; blank lines and lines starting with "#" are skipped.
std::vector<std::string> load_corpus(const std::filesystem::path& path);

// `<stem>.html` plus optional sidecar `<stem>.json`:
// {"name", "chain": ["escapeHtml", ...], "declared_context"?, "metadata"?}.
SinkTemplate load_template(const std::filesystem::path& html_path);
// Every *.html in the directory, sorted by file name.
std::vector<std::filesystem::path> list_templates(const std::filesystem::path& dir);

// Loads and runs every template in `dir`; load failures become error
// entries and the run continues.
std::vector<SuiteEntry> run_suite_dir(const std::filesystem::path& dir,
                                      const StateMachine& machine,
                                      const SuiteOptions& options = {});

}  // namespace xssunit
