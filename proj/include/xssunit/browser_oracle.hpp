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

// In-process stand-in for "load the page in a browser, click everything,
// see whether the payload ran". A document is tokenized, every place where
// the HTML interpreter hands text to the JavaScript interpreter becomes a
// ScriptRegion, and each region is scanned for a call to the sentinel.
//
// Hand-offs modeled:
//   script element body      code verbatim (raw text is never decoded)
//   on* attribute            code = decode_entities(value)
//   href / src / style       javascript: URLs, url('javascript:...'),
//                            expression(...) (the last one legacy only)
//   <style> body             url('javascript:...'), expression(...)
//
// Event handlers are treated as fired: the model clicks every element.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "xssunit/context.hpp"
#include "xssunit/html_tokenizer.hpp"

namespace xssunit {

inline constexpr std::string_view kDefaultSentinel = "attack";

enum class RegionSource { ScriptElementBody, EventHandlerAttribute, JavascriptUrl, CssExpression };

std::string_view to_string(RegionSource source);

struct ScriptRegion {
  RegionSource source = RegionSource::ScriptElementBody;
  // Attribute that carried the code; empty for element bodies.
  std::string attribute;
  // Exactly what the JS scanner sees, after any implicit decoding.
  std::string code;
  Span span;
  // Only evaluated in legacy mode.
  bool legacy = false;
};

struct Execution {
  std::size_t region = 0;
  std::string reason;
};

struct ExecutionTrace {
  std::vector<ScriptRegion> regions;
  std::vector<Execution> executed;
  std::string sentinel;

  bool fired() const { return !executed.empty(); }
};

struct OracleOptions {
  bool legacy = false;
};

std::vector<ScriptRegion> collect_script_regions(std::span<const HtmlEvent> events);

ExecutionTrace interpret(std::string_view document, std::string_view sentinel = kDefaultSentinel,
                         OracleOptions options = {});

// Context of the single `placeholder` occurrence in `html_template`.
// Throws Error(kPlaceholderMissing / kPlaceholderDuplicated).
StartContext detect_context(std::string_view html_template, std::string_view placeholder,
                            OracleOptions options = {});

nlohmann::ordered_json trace_to_json(const ExecutionTrace& trace);

}  // namespace xssunit
