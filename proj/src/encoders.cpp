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

#include "xssunit/encoders.hpp"

#include "xssunit/error.hpp"

namespace xssunit {
namespace {

struct Entry {
  EncoderId id;
  std::string_view name;
};

constexpr Entry kRegistry[] = {
    {EncoderId::Identity, "identity"},
    {EncoderId::EscapeHtml, "escapeHtml"},
    {EncoderId::EscapeHtmlFull, "escapeHtmlFull"},
    {EncoderId::EscapeJavaScript, "escapeJavaScript"},
    {EncoderId::EscapeHtmlDecimal, "escapeHtmlDecimal"},
    {EncoderId::EscapeUrl, "escapeUrl"},
};

bool is_url_unreserved(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
         c == '.' || c == '_' || c == '~' || c == '-';
}

std::string escape_html(std::string_view in, bool apostrophe) {
  std::string out;
  out.reserve(in.size());
  for (char c : in) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'':
        if (apostrophe) {
          out += "&#x27;";
        } else {
          out += c;
        }
        break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_html_decimal(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  for (char c : in) {
    if (c == '&' || c == '<' || c == '>' || c == '"' || c == '\'') {
      out += "&#";
      out += std::to_string(static_cast<int>(c));
      out += ';';
    } else {
      out += c;
    }
  }
  return out;
}

std::string escape_javascript(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  for (char c : in) {
    switch (c) {
      case '\'': out += "\\'"; break;
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_url(std::string_view in) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(in.size());
  for (char ch : in) {
    auto c = static_cast<unsigned char>(ch);
    if (is_url_unreserved(c)) {
      out += ch;
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  return out;
}

}  // namespace

std::string_view encoder_name(EncoderId id) {
  for (const auto& e : kRegistry) {
    if (e.id == id) return e.name;
  }
  return "?";
}

std::optional<EncoderId> find_encoder(std::string_view name) {
  for (const auto& e : kRegistry) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

EncoderId encoder_by_name(std::string_view name) {
  if (auto id = find_encoder(name)) return *id;
  throw Error(ErrorCode::kUnknownEncoder, "unknown encoder '" + std::string(name) + "'");
}

const std::vector<EncoderId>& all_encoders() {
  static const std::vector<EncoderId> ids = [] {
    std::vector<EncoderId> v;
    for (const auto& e : kRegistry) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string encode(EncoderId id, std::string_view input) {
  switch (id) {
    case EncoderId::Identity: return std::string(input);
    case EncoderId::EscapeHtml: return escape_html(input, false);
    case EncoderId::EscapeHtmlFull: return escape_html(input, true);
    case EncoderId::EscapeJavaScript: return escape_javascript(input);
    case EncoderId::EscapeHtmlDecimal: return escape_html_decimal(input);
    case EncoderId::EscapeUrl: return escape_url(input);
  }
  throw Error(ErrorCode::kUnknownEncoder, "unregistered encoder id");
}

std::string encode(std::string_view name, std::string_view input) {
  return encode(encoder_by_name(name), input);
}

EncoderChain::EncoderChain(std::vector<EncoderId> encoders) : encoders_(std::move(encoders)) {
  if (encoders_.empty()) throw Error(ErrorCode::kEmptyChain, "encoder chain is empty");
}

EncoderChain EncoderChain::parse(std::string_view spec) {
  std::vector<EncoderId> ids;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto comma = spec.find(',', pos);
    auto part = spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                 : comma - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (!part.empty()) ids.push_back(encoder_by_name(part));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return EncoderChain(std::move(ids));
}

std::string EncoderChain::to_string() const {
  std::string out;
  for (auto id : encoders_) {
    if (!out.empty()) out += ',';
    out += encoder_name(id);
  }
  return out;
}

std::string apply_chain(const EncoderChain& chain, std::string_view input) {
  std::string value(input);
  for (auto id : chain.encoders()) value = encode(id, value);
  return value;
}

}  // namespace xssunit
