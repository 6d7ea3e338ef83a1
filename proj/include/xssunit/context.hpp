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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xssunit {

// The interpreter position an injected value lands in.
enum class ContextKind { AttributeValue, TagContent, JavaScript };

// Delimiter of the JS string literal holding the injection point.
enum class QuoteKind { Single, Double };

struct StartContext {
  ContextKind kind = ContextKind::TagContent;
  // Present iff kind == JavaScript.
  std::optional<QuoteKind> quote;

  static StartContext attribute_value() { return {ContextKind::AttributeValue, std::nullopt}; }
  static StartContext tag_content() { return {ContextKind::TagContent, std::nullopt}; }
  static StartContext javascript(QuoteKind q) { return {ContextKind::JavaScript, q}; }

  friend bool operator==(const StartContext&, const StartContext&) = default;
};

inline constexpr std::array<ContextKind, 3> kAllContextKinds = {
    ContextKind::AttributeValue, ContextKind::TagContent, ContextKind::JavaScript};

std::string_view to_string(ContextKind kind);
std::string to_string(const StartContext& context);

// Accepts the canonical names ("AttributeValue", "JavaScript(single)") and
// the short CLI aliases ("attr", "content", "js", "js-single", "js-double").
// A bare "js"/"JavaScript" yields quote Single.
std::optional<StartContext> parse_context(std::string_view text);
std::optional<ContextKind> parse_context_kind(std::string_view text);

// Sorted, de-duplicated copy in generation order.
std::vector<ContextKind> normalize_contexts(std::vector<ContextKind> kinds);

}  // namespace xssunit
