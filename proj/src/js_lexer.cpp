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

#include "xssunit/js_lexer.hpp"

namespace xssunit {
namespace {

bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_js_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

JsLexResult lex_js(std::string_view code, std::string_view sentinel) {
  JsLexResult result;
  JsLexState state = JsLexState::Normal;
  // Open `${` substitutions, each holding its nested '{' depth.
  std::vector<int> substitutions;
  const std::size_t n = code.size();
  std::size_t i = 0;

  while (i < n) {
    const char c = code[i];
    switch (state) {
      case JsLexState::Normal:
        if (c == '\'') {
          state = JsLexState::SingleQuoteString;
          ++i;
        } else if (c == '"') {
          state = JsLexState::DoubleQuoteString;
          ++i;
        } else if (c == '`') {
          state = JsLexState::TemplateString;
          ++i;
        } else if (c == '/' && i + 1 < n && code[i + 1] == '/') {
          state = JsLexState::LineComment;
          i += 2;
        } else if (c == '/' && i + 1 < n && code[i + 1] == '*') {
          state = JsLexState::BlockComment;
          i += 2;
        } else if (c == '{') {
          if (!substitutions.empty()) ++substitutions.back();
          ++i;
        } else if (c == '}') {
          if (!substitutions.empty()) {
            if (substitutions.back() == 0) {
              substitutions.pop_back();
              state = JsLexState::TemplateString;
            } else {
              --substitutions.back();
            }
          }
          ++i;
        } else if (is_ident_start(static_cast<unsigned char>(c))) {
          std::size_t end = i + 1;
          while (end < n && is_ident_part(static_cast<unsigned char>(code[end]))) ++end;
          if (!sentinel.empty() && code.substr(i, end - i) == sentinel) {
            std::size_t j = end;
            while (j < n && is_js_space(code[j])) ++j;
            if (j < n && code[j] == '(') result.sentinel_calls.push_back(i);
          }
          i = end;
        } else if (c >= '0' && c <= '9') {
          // Numeric literal; swallow trailing identifier characters too.
          ++i;
          while (i < n && (is_ident_part(static_cast<unsigned char>(code[i])) || code[i] == '.')) ++i;
        } else {
          ++i;
        }
        break;

      case JsLexState::SingleQuoteString:
      case JsLexState::DoubleQuoteString: {
        const char quote = state == JsLexState::SingleQuoteString ? '\'' : '"';
        if (c == '\\') {
          i += 2;
        } else if (c == quote) {
          state = JsLexState::Normal;
          ++i;
        } else if (c == '\n' || c == '\r') {
          // Unterminated literal; resume in code at the line break.
          state = JsLexState::Normal;
          ++i;
        } else {
          ++i;
        }
        break;
      }

      case JsLexState::TemplateString:
        if (c == '\\') {
          i += 2;
        } else if (c == '`') {
          state = JsLexState::Normal;
          ++i;
        } else if (c == '$' && i + 1 < n && code[i + 1] == '{') {
          substitutions.push_back(0);
          state = JsLexState::Normal;
          i += 2;
        } else {
          ++i;
        }
        break;

      case JsLexState::LineComment:
        if (c == '\n' || c == '\r') state = JsLexState::Normal;
        ++i;
        break;

      case JsLexState::BlockComment:
        if (c == '*' && i + 1 < n && code[i + 1] == '/') {
          state = JsLexState::Normal;
          i += 2;
        } else {
          ++i;
        }
        break;
    }
  }
  result.final_state = state;
  return result;
}

bool js_executes(std::string_view sentinel, std::string_view code) {
  if (sentinel.empty()) return false;
  return !lex_js(code, sentinel).sentinel_calls.empty();
}

}  // namespace xssunit
