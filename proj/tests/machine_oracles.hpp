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

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "xssunit/attack_fsm.hpp"

namespace xssunit::testing {

// Plain recursive walk, no memoization, no shared code with count().
inline std::uint64_t brute_force_paths(const StateMachine& m, const std::string& state) {
  if (state == m.final_state()) return 1;
  std::uint64_t total = 0;
  for (const auto& t : m.transitions()) {
    if (t.from != state) continue;
    std::uint64_t tokens = 0;
    for (const auto& l : m.labels()) {
      if (l.name == t.label) tokens = l.tokens.size();
    }
    total += tokens * brute_force_paths(m, t.to);
  }
  return total;
}

inline std::uint64_t brute_force_count(const StateMachine& m, const std::vector<ContextKind>& kinds) {
  std::uint64_t total = 0;
  for (auto k : kinds) total += brute_force_paths(m, m.start_state(k));
  return total;
}

// Small random DAG. Start states have no incoming edges and only their
// outgoing tokens carry the payload slot, so every path has exactly one.
inline StateMachine random_machine(std::mt19937& rng) {
  std::uniform_int_distribution<int> size_dist(4, 8);
  const int n = size_dist(rng);
  std::vector<std::string> states;
  for (int i = 0; i < n; ++i) states.push_back("Q" + std::to_string(i));
  states.push_back("END");

  std::vector<TransitionLabel> labels;
  std::vector<Transition> transitions;
  std::uniform_int_distribution<int> fanout(1, 3);
  std::uniform_int_distribution<int> tokens(1, 3);
  for (int i = 0; i < n; ++i) {
    const int edges = fanout(rng);
    for (int e = 0; e < edges; ++e) {
      std::string to = "END";
      if (i + 1 < n) {
        std::uniform_int_distribution<int> target(std::max(i + 1, 3), n);
        int j = target(rng);
        if (j < n) to = states[j];
      }
      TransitionLabel label;
      label.name = "L" + std::to_string(labels.size());
      const int k = tokens(rng);
      for (int t = 0; t < k; ++t) {
        std::string text = label.name + "t" + std::to_string(t);
        if (i < 3) text += std::string(kPayloadSlot);
        label.tokens.push_back({text, false});
      }
      transitions.push_back({states[i], label.name, to});
      labels.push_back(std::move(label));
    }
  }
  return StateMachine(states, "END", labels, transitions,
                      {{ContextKind::AttributeValue, "Q0"},
                       {ContextKind::TagContent, "Q1"},
                       {ContextKind::JavaScript, "Q2"}});
}

}  // namespace xssunit::testing
