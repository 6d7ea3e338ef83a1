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

#include "xssunit/context.hpp"

#include <algorithm>

#include "xssunit/error.hpp"

namespace xssunit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidMachine: return "InvalidMachine";
    case ErrorCode::kUnknownContext: return "UnknownContext";
    case ErrorCode::kPathWithoutPayloadSlot: return "PathWithoutPayloadSlot";
    case ErrorCode::kMultiplePayloadSlots: return "MultiplePayloadSlots";
    case ErrorCode::kUnknownEncoder: return "UnknownEncoder";
    case ErrorCode::kEmptyChain: return "EmptyChain";
    case ErrorCode::kPlaceholderMissing: return "PlaceholderMissing";
    case ErrorCode::kPlaceholderDuplicated: return "PlaceholderDuplicated";
    case ErrorCode::kContextMismatch: return "ContextMismatch";
    case ErrorCode::kInvalidTemplate: return "InvalidTemplate";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

std::string_view to_string(ContextKind kind) {
  switch (kind) {
    case ContextKind::AttributeValue: return "AttributeValue";
    case ContextKind::TagContent: return "TagContent";
    case ContextKind::JavaScript: return "JavaScript";
  }
  return "?";
}

std::string to_string(const StartContext& context) {
  std::string out(to_string(context.kind));
  if (context.kind == ContextKind::JavaScript) {
    out += context.quote == QuoteKind::Double ? "(double)" : "(single)";
  }
  return out;
}

std::optional<ContextKind> parse_context_kind(std::string_view text) {
  auto ctx = parse_context(text);
  if (!ctx) return std::nullopt;
  return ctx->kind;
}

std::optional<StartContext> parse_context(std::string_view text) {
  if (text == "AttributeValue" || text == "attr" || text == "attribute") {
    return StartContext::attribute_value();
  }
  if (text == "TagContent" || text == "content" || text == "body") {
    return StartContext::tag_content();
  }
  if (text == "JavaScript" || text == "JavaScript(single)" || text == "js" ||
      text == "js-single") {
    return StartContext::javascript(QuoteKind::Single);
  }
  if (text == "JavaScript(double)" || text == "js-double") {
    return StartContext::javascript(QuoteKind::Double);
  }
  return std::nullopt;
}

std::vector<ContextKind> normalize_contexts(std::vector<ContextKind> kinds) {
  std::sort(kinds.begin(), kinds.end());
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());
  return kinds;
}

}  // namespace xssunit
