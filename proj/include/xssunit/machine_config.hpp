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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "xssunit/attack_fsm.hpp"

namespace xssunit {

using Json = nlohmann::ordered_json;

// Document layout:
//   { "states": [...], "final": "FINAL",
//     "start_states": {"AttributeValue": "S1", ...},
//     "labels": [{"name": "...", "tokens": [{"text": "...", "legacy": true}]}],
//     "transitions": [{"from": "S1", "label": "Att.Marker", "to": "S2"}] }
// "legacy" is omitted when false.
Json machine_to_json(const StateMachine& machine);
StateMachine machine_from_json(const Json& doc);

// Two-space indented document with a trailing newline; the bundled
// data/default_machine.json is exactly serialize_machine(default_machine()).
std::string serialize_machine(const StateMachine& machine);
StateMachine load_machine(const std::filesystem::path& path);

// One NDJSON record:
// {index, context, text, path_labels, token_indices, legacy, duplicate_of}.
Json attack_record(const AttackString& attack, std::size_t index);

}  // namespace xssunit
