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

#include <string_view>

#include "xssunit/attack_fsm.hpp"
#include "xssunit/context.hpp"

namespace xssunit {

inline constexpr std::string_view kPlaceholder = "{{INJECT}}";

// Representative sink per start context:
//   AttributeValue      <input type="text" title='{{INJECT}}'>
//   TagContent          <p>{{INJECT}}</p>
//   JavaScript(single)  <a href="#" onclick="Fn('{{INJECT}}');">link</a>
//   JavaScript(double)  <a href="#" onclick='Fn("{{INJECT}}");'>link</a>
std::string_view canonical_template(const StartContext& context);

// The member of the attack's context family whose delimiters the attack
// was built to escape: attribute quoting picked from the leading
// delimiter, a javascript:-capable href for keyword-only attacks, the
// string quote for JS attacks.
std::string_view matching_template(const AttackString& attack);

}  // namespace xssunit
