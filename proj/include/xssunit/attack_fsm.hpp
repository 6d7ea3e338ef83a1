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

// Attack-string generation by walking a finite state machine whose
// transitions carry token lists. Every walk from a start state to the final
// state, combined with every choice of one token per transition, yields one
// attack string: pre-escaping characters, the payload, post-escaping
// characters.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xssunit/context.hpp"

namespace xssunit {

inline constexpr std::string_view kPayloadSlot = "%V%";
inline constexpr std::string_view kDefaultPayload = "attack();";

struct Token {
  std::string text;
  // IE7-era quirk tokens; the oracle honors them only in legacy mode.
  bool legacy = false;

  bool has_payload_slot() const { return text.find(kPayloadSlot) != std::string::npos; }
  friend bool operator==(const Token&, const Token&) = default;
};

struct TransitionLabel {
  std::string name;
  std::vector<Token> tokens;
  friend bool operator==(const TransitionLabel&, const TransitionLabel&) = default;
};

struct Transition {
  std::string from;
  std::string label;
  std::string to;
  friend bool operator==(const Transition&, const Transition&) = default;
};

// Immutable after construction. The constructor rejects machines with
// unknown state/label references, empty token lists, tokens with more than
// one slot, cycles, or states that cannot reach the final state.
class StateMachine {
 public:
  StateMachine(std::vector<std::string> states, std::string final_state,
               std::vector<TransitionLabel> labels, std::vector<Transition> transitions,
               std::map<ContextKind, std::string> start_states);

  const std::vector<std::string>& states() const { return states_; }
  const std::string& final_state() const { return final_state_; }
  const std::vector<TransitionLabel>& labels() const { return labels_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const std::map<ContextKind, std::string>& start_states() const { return start_states_; }

  const TransitionLabel& label(std::string_view name) const;
  const TransitionLabel& label_of(std::size_t transition) const {
    return labels_[transition_label_[transition]];
  }
  // Transition indices leaving `state`, in declaration order.
  std::span<const std::size_t> outgoing(std::string_view state) const;
  const std::string& start_state(ContextKind kind) const;

  friend bool operator==(const StateMachine& a, const StateMachine& b) {
    return a.states_ == b.states_ && a.final_state_ == b.final_state_ &&
           a.labels_ == b.labels_ && a.transitions_ == b.transitions_ &&
           a.start_states_ == b.start_states_;
  }

 private:
  std::size_t state_index(std::string_view name) const;
  void validate() const;

  std::vector<std::string> states_;
  std::string final_state_;
  std::vector<TransitionLabel> labels_;
  std::vector<Transition> transitions_;
  std::map<ContextKind, std::string> start_states_;

  std::vector<std::size_t> transition_label_;
  std::vector<std::vector<std::size_t>> outgoing_;
};

struct AttackPath {
  std::string start;
  std::vector<std::string> labels;
  std::vector<std::size_t> token_choice;
  // Index into StateMachine::transitions() for each step.
  std::vector<std::size_t> transitions;

  friend bool operator==(const AttackPath&, const AttackPath&) = default;
};

struct AttackString {
  std::string text;
  std::string payload;
  AttackPath path;
  StartContext context;
  bool legacy = false;
  // Index of the first earlier attack with identical text.
  std::optional<std::size_t> duplicate_of;
};

// Built-in attack machine: S1..S11 plus FINAL, start states
// AttributeValue -> S1, TagContent -> S5, JavaScript -> S9.
StateMachine default_machine();

std::vector<AttackPath> enumerate_paths(const StateMachine& machine, ContextKind start);

AttackString assemble(const AttackPath& path, const StateMachine& machine,
                      std::string_view payload, StartContext context);

std::vector<AttackString> generate(const StateMachine& machine,
                                   std::vector<ContextKind> contexts,
                                   std::string_view payload = kDefaultPayload);

// Sum over paths of the product of token-list sizes; never materializes
// the strings.
std::uint64_t count(const StateMachine& machine, std::vector<ContextKind> contexts);

}  // namespace xssunit
