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

// Reference output encoders and ordered encoder chains.
//
//   identity           unchanged
//   escapeHtml         & < > "  (apostrophe passes through, as in the
//                      legacy helpers this tool is meant to catch)
//   escapeHtmlFull     escapeHtml plus ' -> &#x27;
//   escapeJavaScript   backslash-escapes ' " \ and LF CR TAB
//   escapeHtmlDecimal  & < > " ' -> &#dd;
//   escapeUrl          percent-encodes every byte outside [A-Za-z0-9._~-]
//
// All replacements are ASCII, so encoders walk UTF-8 bytes directly;
// non-ASCII scalars pass through (escapeUrl encodes their bytes).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xssunit {

enum class EncoderId {
  Identity,
  EscapeHtml,
  EscapeHtmlFull,
  EscapeJavaScript,
  EscapeHtmlDecimal,
  EscapeUrl,
};

std::string_view encoder_name(EncoderId id);
std::optional<EncoderId> find_encoder(std::string_view name);
// Throws Error(kUnknownEncoder).
EncoderId encoder_by_name(std::string_view name);
const std::vector<EncoderId>& all_encoders();

std::string encode(EncoderId id, std::string_view input);
// Name-keyed entry point used by configs and the CLI.
std::string encode(std::string_view name, std::string_view input);

// Applied left to right. Never empty.
class EncoderChain {
 public:
  explicit EncoderChain(std::vector<EncoderId> encoders);
  // "escapeHtmlDecimal,escapeJavaScript"
  static EncoderChain parse(std::string_view spec);
  static EncoderChain identity() { return EncoderChain({EncoderId::Identity}); }

  const std::vector<EncoderId>& encoders() const { return encoders_; }
  std::string to_string() const;

  friend bool operator==(const EncoderChain&, const EncoderChain&) = default;

 private:
  std::vector<EncoderId> encoders_;
};

std::string apply_chain(const EncoderChain& chain, std::string_view input);

}  // namespace xssunit
