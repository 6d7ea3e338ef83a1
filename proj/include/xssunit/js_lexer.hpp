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

// Lexical JavaScript scanner: enough to know whether a position sits in
// code, a string, a template literal or a comment. No parsing.

#include <cstddef>
#include <string_view>
#include <vector>

namespace xssunit {

enum class JsLexState {
  Normal,
  SingleQuoteString,
  DoubleQuoteString,
  TemplateString,
  LineComment,
  BlockComment,
};

struct JsLexResult {
  JsLexState final_state = JsLexState::Normal;
  // Offsets of `sentinel` identifiers in Normal state followed, modulo
  // whitespace, by '('.
  std::vector<std::size_t> sentinel_calls;
};

JsLexResult lex_js(std::string_view code, std::string_view sentinel = {});

// True iff `sentinel` appears as a call in code position.
bool js_executes(std::string_view sentinel, std::string_view code);

}  // namespace xssunit
