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

#include "xssunit/browser_oracle.hpp"

#include "xssunit/js_lexer.hpp"

namespace xssunit {
namespace {

char lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

std::size_t find_ci(std::string_view hay, std::string_view needle, std::size_t from = 0) {
  if (needle.size() > hay.size()) return std::string_view::npos;
  for (std::size_t i = from; i + needle.size() <= hay.size(); ++i) {
    bool ok = true;
    for (std::size_t k = 0; k < needle.size() && ok; ++k) ok = lower(hay[i + k]) == needle[k];
    if (ok) return i;
  }
  return std::string_view::npos;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && find_ci(s.substr(0, prefix.size()), prefix) == 0;
}

bool is_css_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string percent_decode(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size() && hex_value(s[i + 1]) >= 0 &&
        hex_value(s[i + 2]) >= 0) {
      out += static_cast<char>(hex_value(s[i + 1]) * 16 + hex_value(s[i + 2]));
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

// URL parsers trim C0 controls and spaces at both ends and drop tab/LF/CR
// anywhere before looking at the scheme.
std::string normalize_url(std::string_view value) {
  std::size_t b = 0;
  std::size_t e = value.size();
  while (b < e && static_cast<unsigned char>(value[b]) <= 0x20) ++b;
  while (e > b && static_cast<unsigned char>(value[e - 1]) <= 0x20) --e;
  std::string out;
  for (char c : value.substr(b, e - b)) {
    if (c != '\t' && c != '\n' && c != '\r') out += c;
  }
  return out;
}

bool is_event_handler(std::string_view name) {
  return name.size() > 2 && name[0] == 'o' && name[1] == 'n';
}

bool is_special_attribute(std::string_view name) {
  return name == "href" || name == "src" || name == "style";
}

// If `inner` is exactly one quoted string literal, returns its body.
std::string unwrap_string_literal(std::string_view inner) {
  std::size_t b = 0;
  std::size_t e = inner.size();
  while (b < e && is_css_space(inner[b])) ++b;
  while (e > b && is_css_space(inner[e - 1])) --e;
  std::string_view t = inner.substr(b, e - b);
  if (t.size() >= 2 && (t.front() == '\'' || t.front() == '"') && t.back() == t.front()) {
    const char q = t.front();
    bool escaped = false;
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
      if (escaped) {
        escaped = false;
      } else if (t[i] == '\\') {
        escaped = true;
      } else if (t[i] == q) {
        return std::string(inner);
      }
    }
    if (!escaped) return std::string(t.substr(1, t.size() - 2));
  }
  return std::string(inner);
}

// Text between `open` (just past '(') and the matching ')', skipping
// quoted sections. Runs to the end when unbalanced.
std::string_view balanced_group(std::string_view s, std::size_t open) {
  int depth = 1;
  char quote = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    const char c = s[i];
    if (quote) {
      if (c == '\\') {
        ++i;
      } else if (c == quote) {
        quote = 0;
      }
    } else if (c == '\'' || c == '"') {
      quote = c;
    } else if (c == '(') {
      ++depth;
    } else if (c == ')' && --depth == 0) {
      return s.substr(open, i - open);
    }
  }
  return s.substr(open);
}

void scan_css(std::string_view css, const std::string& attribute, Span span,
              std::vector<ScriptRegion>& out) {
  for (std::size_t at = find_ci(css, "url("); at != std::string_view::npos;
       at = find_ci(css, "url(", at + 4)) {
    std::size_t p = at + 4;
    while (p < css.size() && is_css_space(css[p])) ++p;
    char quote = 0;
    if (p < css.size() && (css[p] == '\'' || css[p] == '"')) quote = css[p++];
    while (p < css.size() && is_css_space(css[p])) ++p;
    if (!starts_with_ci(css.substr(p), "javascript:")) continue;
    p += 11;
    std::size_t end = css.find(quote ? quote : ')', p);
    if (end == std::string_view::npos) end = css.size();
    out.push_back({RegionSource::JavascriptUrl, attribute,
                   percent_decode(css.substr(p, end - p)), span, false});
  }
  for (std::size_t at = find_ci(css, "expression("); at != std::string_view::npos;
       at = find_ci(css, "expression(", at + 11)) {
    std::string_view inner = balanced_group(css, at + 11);
    out.push_back({RegionSource::CssExpression, attribute, unwrap_string_literal(inner), span,
                   true});
  }
}

void scan_special_attribute(const Attribute& attr, std::vector<ScriptRegion>& out) {
  std::string decoded = decode_entities(attr.value);
  std::string url = normalize_url(decoded);
  if (starts_with_ci(url, "javascript:")) {
    out.push_back({RegionSource::JavascriptUrl, attr.name,
                   percent_decode(std::string_view(url).substr(11)), attr.value_span, false});
    return;
  }
  scan_css(decoded, attr.name, attr.value_span, out);
}

std::string describe(const ScriptRegion& region) {
  switch (region.source) {
    case RegionSource::ScriptElementBody: return "sentinel call in script element";
    case RegionSource::EventHandlerAttribute:
      return "sentinel call in " + region.attribute + " handler";
    case RegionSource::JavascriptUrl:
      return "sentinel call in javascript: URL (" + region.attribute + ")";
    case RegionSource::CssExpression:
      return "sentinel call in CSS expression (" + region.attribute + ")";
  }
  return "sentinel call";
}

}  // namespace

std::string_view to_string(RegionSource source) {
  switch (source) {
    case RegionSource::ScriptElementBody: return "ScriptElementBody";
    case RegionSource::EventHandlerAttribute: return "EventHandlerAttribute";
    case RegionSource::JavascriptUrl: return "JavascriptUrl";
    case RegionSource::CssExpression: return "CssExpression";
  }
  return "?";
}

std::vector<ScriptRegion> collect_script_regions(std::span<const HtmlEvent> events) {
  std::vector<ScriptRegion> out;
  for (const auto& ev : events) {
    if (ev.kind == HtmlEventKind::RawText) {
      if (ev.name == "script") {
        out.push_back({RegionSource::ScriptElementBody, "", ev.text, ev.span, false});
      } else if (ev.name == "style") {
        scan_css(ev.text, "style", ev.span, out);
      }
      continue;
    }
    // A tag cut off by end of input is never built by a browser.
    if (ev.kind != HtmlEventKind::StartTag || ev.malformed) continue;
    for (const auto& attr : ev.attributes) {
      if (is_event_handler(attr.name)) {
        out.push_back({RegionSource::EventHandlerAttribute, attr.name, decode_entities(attr.value),
                       attr.value_span, false});
      } else if (is_special_attribute(attr.name)) {
        scan_special_attribute(attr, out);
      }
    }
  }
  return out;
}

ExecutionTrace interpret(std::string_view document, std::string_view sentinel,
                         OracleOptions options) {
  ExecutionTrace trace;
  trace.sentinel = std::string(sentinel);
  auto events = tokenize(document, TokenizerOptions{options.legacy});
  trace.regions = collect_script_regions(events);
  for (std::size_t i = 0; i < trace.regions.size(); ++i) {
    const auto& region = trace.regions[i];
    if (region.legacy && !options.legacy) continue;
    if (js_executes(sentinel, region.code)) trace.executed.push_back({i, describe(region)});
  }
  return trace;
}

nlohmann::ordered_json trace_to_json(const ExecutionTrace& trace) {
  using Json = nlohmann::ordered_json;
  Json regions = Json::array();
  for (const auto& r : trace.regions) {
    regions.push_back(Json{{"source", to_string(r.source)},
                           {"attribute", r.attribute},
                           {"code", r.code},
                           {"span", Json::array({r.span.begin, r.span.end})},
                           {"legacy", r.legacy}});
  }
  Json executed = Json::array();
  for (const auto& e : trace.executed) {
    executed.push_back(Json{{"region", e.region}, {"reason", e.reason}});
  }
  return Json{{"sentinel", trace.sentinel}, {"regions", regions}, {"executed", executed}};
}

}  // namespace xssunit
