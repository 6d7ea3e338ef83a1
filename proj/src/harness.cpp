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

#include "xssunit/harness.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "xssunit/error.hpp"

namespace xssunit {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

StartContext validate_template(const SinkTemplate& sink, OracleOptions options) {
  StartContext detected = detect_context(sink.html, kPlaceholder, options);
  if (sink.declared_context && *sink.declared_context != detected) {
    throw Error(ErrorCode::kContextMismatch,
                sink.name + ": declared context " + to_string(*sink.declared_context) +
                    " but the placeholder sits in " + to_string(detected));
  }
  return detected;
}

std::string render(const SinkTemplate& sink, std::string_view raw_value) {
  const auto at = sink.html.find(kPlaceholder);
  if (at == std::string::npos) {
    throw Error(ErrorCode::kPlaceholderMissing, sink.name + ": placeholder not found");
  }
  std::string out = sink.html.substr(0, at);
  out += apply_chain(sink.chain, raw_value);
  out += sink.html.substr(at + kPlaceholder.size());
  return out;
}

Verdict run_unit_test(const SinkTemplate& sink, std::span<const AttackString> attacks,
                      const RunOptions& options) {
  if (attacks.empty()) throw std::invalid_argument("run_unit_test needs at least one attack");
  Verdict verdict;
  for (std::size_t i = 0; i < attacks.size(); ++i) {
    ++verdict.attacks_tried;
    auto trace = interpret(render(sink, attacks[i].text), options.sentinel, options.oracle);
    if (!trace.fired()) continue;
    verdict.hits.push_back(i);
    if (!verdict.vulnerable) {
      verdict.vulnerable = true;
      verdict.witness = attacks[i];
      verdict.trace = std::move(trace);
    }
    if (options.mode == RunMode::StopFirst) break;
  }
  if (verdict.vulnerable) {
    auto replay = interpret(render(sink, verdict.witness->text), options.sentinel, options.oracle);
    if (!replay.fired()) throw std::logic_error(sink.name + ": witness does not replay");
  }
  return verdict;
}

std::vector<SuiteEntry> run_suite(std::span<const SinkTemplate> templates,
                                  const StateMachine& machine, const SuiteOptions& options) {
  std::vector<SuiteEntry> report;
  for (const auto& sink : templates) {
    SuiteEntry entry;
    entry.name = sink.name;
    entry.metadata = sink.metadata;
    try {
      StartContext context = validate_template(sink, options.run.oracle);
      entry.context = context;
      std::vector<ContextKind> kinds = {context.kind};
      if (options.all_contexts) kinds.assign(kAllContextKinds.begin(), kAllContextKinds.end());
      auto attacks = generate(machine, kinds, options.payload);
      entry.verdict = run_unit_test(sink, attacks, options.run);
    } catch (const Error& e) {
      entry.error = std::string(to_string(e.code())) + ": " + e.what();
    }
    report.push_back(std::move(entry));
  }
  return report;
}

CorpusReport map_corpus(std::span<const std::string> corpus,
                        std::span<const AttackString> generated) {
  CorpusReport report;
  report.total = corpus.size();
  for (const auto& entry : corpus) {
    bool exact = false;
    bool mapped = false;
    for (const auto& attack : generated) {
      if (attack.text == entry) {
        exact = true;
        mapped = true;
        break;
      }
      if (!mapped && entry.find(attack.text) != std::string::npos) mapped = true;
    }
    if (exact) ++report.exact_matches;
    if (mapped) {
      ++report.mapped;
    } else {
      report.unmapped.push_back(entry);
    }
  }
  return report;
}

std::vector<std::string> load_corpus(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

SinkTemplate load_template(const std::filesystem::path& html_path) {
  SinkTemplate sink;
  sink.name = html_path.stem().string();
  sink.html = read_file(html_path);
  // Editors add a final newline; it is not part of the sink.
  while (!sink.html.empty() && (sink.html.back() == '\n' || sink.html.back() == '\r')) {
    sink.html.pop_back();
  }
  auto sidecar = html_path;
  sidecar.replace_extension(".json");
  if (!std::filesystem::exists(sidecar)) return sink;

  try {
    auto doc = nlohmann::json::parse(read_file(sidecar));
    if (doc.contains("name")) sink.name = doc.at("name").get<std::string>();
    if (doc.contains("chain")) {
      std::vector<EncoderId> ids;
      for (const auto& n : doc.at("chain")) ids.push_back(encoder_by_name(n.get<std::string>()));
      sink.chain = EncoderChain(std::move(ids));
    }
    if (doc.contains("declared_context") && !doc.at("declared_context").is_null()) {
      auto text = doc.at("declared_context").get<std::string>();
      auto ctx = parse_context(text);
      if (!ctx) throw Error(ErrorCode::kUnknownContext, "unknown context '" + text + "'");
      sink.declared_context = *ctx;
    }
    if (doc.contains("metadata")) {
      for (const auto& [k, v] : doc.at("metadata").items()) {
        sink.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidTemplate, sidecar.string() + ": " + e.what());
  }
  return sink;
}

std::vector<std::filesystem::path> list_templates(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::kIo, dir.string() + " is not a directory");
  }
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".html") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SuiteEntry> run_suite_dir(const std::filesystem::path& dir,
                                      const StateMachine& machine,
                                      const SuiteOptions& options) {
  std::vector<SuiteEntry> report;
  for (const auto& path : list_templates(dir)) {
    SinkTemplate sink;
    try {
      sink = load_template(path);
    } catch (const Error& e) {
      SuiteEntry entry;
      entry.name = path.stem().string();
      entry.error = std::string(to_string(e.code())) + ": " + e.what();
      report.push_back(std::move(entry));
      continue;
    }
    auto one = run_suite(std::span<const SinkTemplate>(&sink, 1), machine, options);
    report.push_back(std::move(one.front()));
  }
  return report;
}

}  // namespace xssunit
