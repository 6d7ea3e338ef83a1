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

#include "xssunit/report.hpp"

#include "xssunit/machine_config.hpp"

namespace xssunit {

Json verdict_to_json(const Verdict& verdict) {
  Json doc;
  doc["status"] = verdict.vulnerable ? "vulnerable" : "safe";
  doc["attacks_tried"] = verdict.attacks_tried;
  if (verdict.vulnerable) {
    doc["witness"] = attack_record(*verdict.witness, verdict.hits.front());
    doc["trace"] = trace_to_json(*verdict.trace);
  } else {
    doc["witness"] = nullptr;
    doc["trace"] = nullptr;
  }
  doc["hits"] = verdict.hits;
  return doc;
}

Json suite_report_to_json(std::span<const SuiteEntry> entries) {
  Json results = Json::array();
  std::size_t vulnerable = 0;
  std::size_t safe = 0;
  std::size_t errors = 0;
  for (const auto& entry : entries) {
    Json item;
    item["name"] = entry.name;
    item["context"] = entry.context ? Json(to_string(*entry.context)) : Json(nullptr);
    if (entry.verdict) {
      item["verdict"] = verdict_to_json(*entry.verdict);
      ++(entry.verdict->vulnerable ? vulnerable : safe);
    } else {
      item["verdict"] = nullptr;
    }
    item["error"] = entry.error ? Json(*entry.error) : Json(nullptr);
    Json meta = Json::object();
    for (const auto& [k, v] : entry.metadata) meta[k] = v;
    item["metadata"] = std::move(meta);
    if (entry.error) ++errors;
    results.push_back(std::move(item));
  }
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["summary"] = Json{{"templates", entries.size()},
                        {"vulnerable", vulnerable},
                        {"safe", safe},
                        {"errors", errors}};
  doc["results"] = std::move(results);
  return doc;
}

Json corpus_report_to_json(const CorpusReport& report) {
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["total"] = report.total;
  doc["exact_matches"] = report.exact_matches;
  doc["mapped"] = report.mapped;
  doc["unmapped"] = report.unmapped;
  return doc;
}

std::string dump_report(const Json& doc) {
  return doc.dump(2, ' ', false, nlohmann::ordered_json::error_handler_t::replace) + "\n";
}

}  // namespace xssunit
