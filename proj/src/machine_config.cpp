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

#include "xssunit/machine_config.hpp"

#include <fstream>
#include <sstream>

#include "xssunit/error.hpp"

namespace xssunit {

Json machine_to_json(const StateMachine& machine) {
  Json doc;
  doc["states"] = machine.states();
  doc["final"] = machine.final_state();
  Json starts = Json::object();
  for (const auto& [kind, state] : machine.start_states()) {
    starts[std::string(to_string(kind))] = state;
  }
  doc["start_states"] = starts;
  Json labels = Json::array();
  for (const auto& label : machine.labels()) {
    Json tokens = Json::array();
    for (const auto& token : label.tokens) {
      Json t;
      t["text"] = token.text;
      if (token.legacy) t["legacy"] = true;
      tokens.push_back(std::move(t));
    }
    labels.push_back(Json{{"name", label.name}, {"tokens", std::move(tokens)}});
  }
  doc["labels"] = std::move(labels);
  Json transitions = Json::array();
  for (const auto& tr : machine.transitions()) {
    transitions.push_back(Json{{"from", tr.from}, {"label", tr.label}, {"to", tr.to}});
  }
  doc["transitions"] = std::move(transitions);
  return doc;
}

StateMachine machine_from_json(const Json& doc) {
  try {
    std::vector<std::string> states = doc.at("states").get<std::vector<std::string>>();
    std::string final_state = doc.at("final").get<std::string>();
    std::map<ContextKind, std::string> starts;
    for (const auto& [key, value] : doc.at("start_states").items()) {
      auto kind = parse_context_kind(key);
      if (!kind) throw Error(ErrorCode::kInvalidMachine, "unknown start context " + key);
      starts[*kind] = value.get<std::string>();
    }
    std::vector<TransitionLabel> labels;
    for (const auto& l : doc.at("labels")) {
      TransitionLabel label{l.at("name").get<std::string>(), {}};
      for (const auto& t : l.at("tokens")) {
        label.tokens.push_back(Token{t.at("text").get<std::string>(), t.value("legacy", false)});
      }
      labels.push_back(std::move(label));
    }
    std::vector<Transition> transitions;
    for (const auto& t : doc.at("transitions")) {
      transitions.push_back(Transition{t.at("from").get<std::string>(),
                                       t.at("label").get<std::string>(),
                                       t.at("to").get<std::string>()});
    }
    return StateMachine(std::move(states), std::move(final_state), std::move(labels),
                        std::move(transitions), std::move(starts));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidMachine, std::string("malformed machine config: ") + e.what());
  }
}

std::string serialize_machine(const StateMachine& machine) {
  return machine_to_json(machine).dump(2) + "\n";
}

StateMachine load_machine(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidMachine, path.string() + ": " + e.what());
  }
  return machine_from_json(doc);
}

Json attack_record(const AttackString& attack, std::size_t index) {
  Json rec;
  rec["index"] = index;
  rec["context"] = to_string(attack.context);
  rec["text"] = attack.text;
  rec["path_labels"] = attack.path.labels;
  rec["token_indices"] = attack.path.token_choice;
  rec["legacy"] = attack.legacy;
  rec["duplicate_of"] = attack.duplicate_of ? Json(*attack.duplicate_of) : Json(nullptr);
  return rec;
}

}  // namespace xssunit
