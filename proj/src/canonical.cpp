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

#include "xssunit/canonical.hpp"

namespace xssunit {
namespace {

constexpr std::string_view kAttrSingle = "<input type=\"text\" title='{{INJECT}}'>";
constexpr std::string_view kAttrDouble = "<input type=\"text\" title=\"{{INJECT}}\">";
constexpr std::string_view kAttrBacktick = "<input type=\"text\" title=`{{INJECT}}`>";
constexpr std::string_view kAttrUnquoted = "<input type=\"text\" title=x{{INJECT}}>";
constexpr std::string_view kAttrUrl = "<a href=\"{{INJECT}}\">link</a>";
constexpr std::string_view kBody = "<p>{{INJECT}}</p>";
constexpr std::string_view kJsSingle = "<a href=\"#\" onclick=\"Fn('{{INJECT}}');\">link</a>";
constexpr std::string_view kJsDouble = "<a href=\"#\" onclick='Fn(\"{{INJECT}}\");'>link</a>";

}  // namespace

std::string_view canonical_template(const StartContext& context) {
  switch (context.kind) {
    case ContextKind::AttributeValue: return kAttrSingle;
    case ContextKind::TagContent: return kBody;
    case ContextKind::JavaScript:
      return context.quote == QuoteKind::Double ? kJsDouble : kJsSingle;
  }
  return kBody;
}

std::string_view matching_template(const AttackString& attack) {
  const char lead = attack.text.empty() ? '\0' : attack.text.front();
  switch (attack.context.kind) {
    case ContextKind::AttributeValue:
      switch (lead) {
        case '\'': return kAttrSingle;
        case '"': return kAttrDouble;
        case '`': return kAttrBacktick;
        case ' ': return kAttrUnquoted;
        default: return kAttrUrl;
      }
    case ContextKind::TagContent: return kBody;
    case ContextKind::JavaScript: return lead == '"' ? kJsDouble : kJsSingle;
  }
  return kBody;
}

}  // namespace xssunit
