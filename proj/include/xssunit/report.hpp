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

#include <span>
#include <string>

#include <json.hpp>

#include "xssunit/harness.hpp"

namespace xssunit {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

Json verdict_to_json(const Verdict& verdict);
Json suite_report_to_json(std::span<const SuiteEntry> entries);
Json corpus_report_to_json(const CorpusReport& report);

// Deterministic text form: two-space indent, trailing newline, invalid
// UTF-8 replaced.
std::string dump_report(const Json& doc);

}  // namespace xssunit
