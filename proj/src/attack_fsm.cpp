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

#include "xssunit/attack_fsm.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "xssunit/error.hpp"

namespace xssunit {
namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidMachine, "invalid state machine: " + what);
}

// Labels whose every token must carry the payload slot.
bool requires_slot(std::string_view label) {
  return label == "Ctx.Keywords" || label == "Event" || label == "Start.Script" ||
         label == "Exp.Separator";
}

std::size_t count_slots(std::string_view text) {
  std::size_t n = 0;
  for (auto pos = text.find(kPayloadSlot); pos != std::string_view::npos;
       pos = text.find(kPayloadSlot, pos + kPayloadSlot.size())) {
    ++n;
  }
  return n;
}

}  // namespace

StateMachine::StateMachine(std::vector<std::string> states, std::string final_state,
                           std::vector<TransitionLabel> labels,
                           std::vector<Transition> transitions,
                           std::map<ContextKind, std::string> start_states)
    : states_(std::move(states)),
      final_state_(std::move(final_state)),
      labels_(std::move(labels)),
      transitions_(std::move(transitions)),
      start_states_(std::move(start_states)) {
  outgoing_.resize(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (states_[i] == states_[j]) invalid("duplicate state " + states_[i]);
    }
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i].name == labels_[j].name) invalid("duplicate label " + labels_[i].name);
    }
  }
  for (std::size_t t = 0; t < transitions_.size(); ++t) {
    const auto& tr = transitions_[t];
    auto it = std::find_if(labels_.begin(), labels_.end(),
                           [&](const TransitionLabel& l) { return l.name == tr.label; });
    if (it == labels_.end()) invalid("transition references unknown label " + tr.label);
    transition_label_.push_back(static_cast<std::size_t>(it - labels_.begin()));
    std::size_t from = state_index(tr.from);
    state_index(tr.to);
    if (tr.from == final_state_) invalid("transition leaves the final state");
    outgoing_[from].push_back(t);
  }
  validate();
}

std::size_t StateMachine::state_index(std::string_view name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) invalid("unknown state " + std::string(name));
  return static_cast<std::size_t>(it - states_.begin());
}

void StateMachine::validate() const {
  state_index(final_state_);
  for (const auto& label : labels_) {
    if (label.tokens.empty()) invalid("label " + label.name + " has no tokens");
    for (const auto& token : label.tokens) {
      auto slots = count_slots(token.text);
      if (slots > 1) invalid("token '" + token.text + "' has more than one payload slot");
      if (slots == 0 && requires_slot(label.name)) {
        invalid("token '" + token.text + "' of " + label.name + " lacks the payload slot");
      }
    }
  }
  for (const auto& [kind, state] : start_states_) {
    if (state_index(state) == state_index(final_state_)) invalid("start state is final");
  }

  // 0 = unvisited, 1 = on stack, 2 = done (reaches final).
  std::vector<int> mark(states_.size(), 0);
  const std::size_t final_idx = state_index(final_state_);
  std::function<void(std::size_t)> visit = [&](std::size_t s) {
    mark[s] = 1;
    for (std::size_t t : outgoing_[s]) {
      std::size_t to = state_index(transitions_[t].to);
      if (mark[to] == 1) invalid("cycle through state " + states_[to]);
      if (mark[to] == 0) visit(to);
    }
    mark[s] = 2;
  };
  for (std::size_t s = 0; s < states_.size(); ++s) {
    if (mark[s] == 0) visit(s);
  }
  for (std::size_t s = 0; s < states_.size(); ++s) {
    if (s != final_idx && outgoing_[s].empty()) {
      invalid("state " + states_[s] + " cannot reach " + final_state_);
    }
  }
}

const TransitionLabel& StateMachine::label(std::string_view name) const {
  for (const auto& l : labels_) {
    if (l.name == name) return l;
  }
  invalid("unknown label " + std::string(name));
}

std::span<const std::size_t> StateMachine::outgoing(std::string_view state) const {
  return outgoing_[state_index(state)];
}

const std::string& StateMachine::start_state(ContextKind kind) const {
  auto it = start_states_.find(kind);
  if (it == start_states_.end()) {
    throw Error(ErrorCode::kUnknownContext,
                "machine has no start state for " + std::string(to_string(kind)));
  }
  return it->second;
}

StateMachine default_machine() {
  auto tok = [](std::string text, bool legacy = false) { return Token{std::move(text), legacy}; };
  std::vector<TransitionLabel> labels = {
      {"Att.Marker", {tok("'"), tok("\""), tok("`", true), tok(" ")}},
      {"End.Tag", {tok(">"), tok("/>")}},
      {"Tag.Starter", {tok("<a "), tok("<img ")}},
      {"Att.Starter", {tok("atb="), tok("atb=' '"), tok("atb=\" \"")}},
      {"Event", {tok("onclick='%V%'")}},
      {"Ctx.Keywords",
       {tok("javascript:%V%"), tok("url('javascript:%V%')"), tok("expression('%V%')", true)}},
      {"Spec.Att", {tok("src="), tok("style="), tok("href=")}},
      {"Start.Script",
       {tok("<script>%V%</script>"), tok("</script><script>%V%</script>"),
        tok("</title><script>%V%</script>"), tok("</textarea><script>%V%</script>")}},
      {"Literal.Term", {tok("'"), tok("\"")}},
      {"Exp.Separator", {tok(";%V%"), tok(");%V%"), tok("+(%V%)")}},
      {"Stmt.Suffix", {tok("//"), tok(";//"), tok("")}},
  };
  std::vector<Transition> transitions = {
      {"S1", "Att.Marker", "S2"},     {"S1", "Ctx.Keywords", "FINAL"},
      {"S2", "End.Tag", "S5"},        {"S2", "Event", "S4"},
      {"S2", "Spec.Att", "S3"},       {"S3", "Ctx.Keywords", "S4"},
      {"S4", "End.Tag", "FINAL"},     {"S5", "Start.Script", "FINAL"},
      {"S5", "Tag.Starter", "S6"},    {"S6", "Event", "S8"},
      {"S6", "Spec.Att", "S7"},       {"S7", "Ctx.Keywords", "S8"},
      {"S8", "End.Tag", "FINAL"},     {"S9", "Literal.Term", "S10"},
      {"S10", "Exp.Separator", "S11"}, {"S11", "Stmt.Suffix", "FINAL"},
  };
  std::vector<std::string> states = {"S1", "S2", "S3", "S4",  "S5",  "S6",
                                     "S7", "S8", "S9", "S10", "S11", "FINAL"};
  return StateMachine(std::move(states), "FINAL", std::move(labels), std::move(transitions),
                      {{ContextKind::AttributeValue, "S1"},
                       {ContextKind::TagContent, "S5"},
                       {ContextKind::JavaScript, "S9"}});
}

std::vector<AttackPath> enumerate_paths(const StateMachine& machine, ContextKind start) {
  std::vector<AttackPath> out;
  AttackPath current;
  current.start = machine.start_state(start);

  std::function<void(const std::string&)> walk = [&](const std::string& state) {
    if (state == machine.final_state()) {
      out.push_back(current);
      return;
    }
    for (std::size_t t : machine.outgoing(state)) {
      const auto& tr = machine.transitions()[t];
      const auto& label = machine.label_of(t);
      for (std::size_t k = 0; k < label.tokens.size(); ++k) {
        current.labels.push_back(label.name);
        current.token_choice.push_back(k);
        current.transitions.push_back(t);
        walk(tr.to);
        current.labels.pop_back();
        current.token_choice.pop_back();
        current.transitions.pop_back();
      }
    }
  };
  walk(current.start);
  return out;
}

AttackString assemble(const AttackPath& path, const StateMachine& machine,
                      std::string_view payload, StartContext context) {
  AttackString attack;
  attack.payload = std::string(payload);
  attack.path = path;
  attack.context = context;

  bool slotted = false;
  for (std::size_t i = 0; i < path.token_choice.size(); ++i) {
    const auto& label = path.transitions.size() == path.token_choice.size()
                            ? machine.label_of(path.transitions[i])
                            : machine.label(path.labels[i]);
    const Token& token = label.tokens.at(path.token_choice[i]);
    attack.legacy = attack.legacy || token.legacy;
    auto slot = token.text.find(kPayloadSlot);
    if (slot == std::string::npos) {
      attack.text += token.text;
      continue;
    }
    if (slotted) {
      throw Error(ErrorCode::kMultiplePayloadSlots,
                  "path carries more than one payload slot (label " + label.name + ")");
    }
    slotted = true;
    attack.text.append(token.text, 0, slot);
    attack.text += payload;
    attack.text.append(token.text, slot + kPayloadSlot.size());
  }
  if (!slotted) {
    throw Error(ErrorCode::kPathWithoutPayloadSlot, "path from " + path.start +
                                                        " has no token with a payload slot");
  }
  return attack;
}

std::vector<AttackString> generate(const StateMachine& machine,
                                   std::vector<ContextKind> contexts,
                                   std::string_view payload) {
  std::vector<AttackString> out;
  std::unordered_map<std::string, std::size_t> first_seen;
  for (ContextKind kind : normalize_contexts(std::move(contexts))) {
    for (const auto& path : enumerate_paths(machine, kind)) {
      StartContext context{kind, std::nullopt};
      if (kind == ContextKind::JavaScript) context.quote = QuoteKind::Single;
      AttackString attack = assemble(path, machine, payload, context);
      if (kind == ContextKind::JavaScript && !attack.text.empty() && attack.text[0] == '"') {
        attack.context.quote = QuoteKind::Double;
      }
      auto [it, inserted] = first_seen.emplace(attack.text, out.size());
      if (!inserted) attack.duplicate_of = it->second;
      out.push_back(std::move(attack));
    }
  }
  return out;
}

std::uint64_t count(const StateMachine& machine, std::vector<ContextKind> contexts) {
  std::unordered_map<std::string, std::uint64_t> memo;
  std::function<std::uint64_t(const std::string&)> ways = [&](const std::string& state) {
    if (state == machine.final_state()) return std::uint64_t{1};
    if (auto it = memo.find(state); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (std::size_t t : machine.outgoing(state)) {
      total += machine.label_of(t).tokens.size() * ways(machine.transitions()[t].to);
    }
    memo.emplace(state, total);
    return total;
  };
  std::uint64_t total = 0;
  for (ContextKind kind : normalize_contexts(std::move(contexts))) {
    total += ways(machine.start_state(kind));
  }
  return total;
}

}  // namespace xssunit
