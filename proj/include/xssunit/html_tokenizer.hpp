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

// A small HTML tokenizer modeled on the WHATWG state machine, reduced to
// the states that matter for deciding where script can start: tags,
// attributes in all quoting styles, comments and raw-text elements
// (script, style, title, textarea). It is total: any byte string produces
// an ordered, non-overlapping event stream, with unterminated constructs
// flagged `malformed`.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xssunit {

// Half-open byte range [begin, end) into the document.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

struct Attribute {
  std::string name;   // ASCII-lowercased
  std::string value;  // raw, entities not decoded
  Span span;
  Span value_span;
};

enum class HtmlEventKind { Text, StartTag, EndTag, Comment, RawText };

struct HtmlEvent {
  HtmlEventKind kind = HtmlEventKind::Text;
  std::string name;  // tag name, or raw-text element name
  std::vector<Attribute> attributes;
  std::string text;  // Text / Comment / RawText body
  Span span;
  bool self_closing = false;
  bool malformed = false;

  const Attribute* attribute(std::string_view attr_name) const;
};

enum class TokenizerState {
  Data,
  TagOpen,
  EndTagOpen,
  TagName,
  BeforeAttrName,
  AttrName,
  AfterAttrName,
  BeforeAttrValue,
  AttrValueDouble,
  AttrValueSingle,
  AttrValueBacktick,
  AttrValueUnquoted,
  AfterAttrValueQuoted,
  SelfClosingStartTag,
  RawText,
  Comment,
  BogusComment,
};

struct TokenizerOptions {
  // IE-era quirk: backtick delimits attribute values.
  bool legacy = false;
};

class HtmlTokenizer {
 public:
  explicit HtmlTokenizer(std::string_view document, TokenizerOptions options = {});

  // Consumes input up to, not including, byte offset `stop`.
  void advance_to(std::size_t stop);
  // Consumes the remaining input and flushes pending constructs.
  std::vector<HtmlEvent> finish();

  TokenizerState state() const { return state_; }
  std::size_t position() const { return pos_; }
  std::span<const HtmlEvent> events() const { return events_; }

  // Valid while inside a tag.
  const HtmlEvent& current_tag() const { return tag_; }
  // The attribute under construction, or nullptr.
  const Attribute* current_attribute() const { return attr_active_ ? &attr_ : nullptr; }
  // Valid in RawText state.
  std::string_view raw_text_element() const { return raw_name_; }
  std::string_view raw_text_so_far() const;

 private:
  void step();
  void begin_tag(HtmlEventKind kind);
  void begin_attribute();
  void commit_attribute();
  void emit_tag(std::size_t end);
  void emit_comment(std::size_t body_end, std::size_t end, bool malformed);
  void flush_text(std::size_t end);
  bool at_raw_text_end() const;

  std::string_view doc_;
  TokenizerOptions options_;
  std::size_t pos_ = 0;
  TokenizerState state_ = TokenizerState::Data;

  std::size_t text_start_ = 0;
  std::size_t tag_start_ = 0;
  HtmlEvent tag_;
  Attribute attr_;
  bool attr_active_ = false;
  std::string raw_name_;
  std::size_t raw_start_ = 0;
  std::size_t comment_start_ = 0;
  bool finished_ = false;

  std::vector<HtmlEvent> events_;
};

std::vector<HtmlEvent> tokenize(std::string_view document, TokenizerOptions options = {});

// Single pass: &lt; &gt; &amp; &quot; &apos; plus &#dd; and &#xhh;
// (semicolon optional on numeric references). Unknown entities pass
// through unchanged; invalid code points become U+FFFD.
std::string decode_entities(std::string_view s);

}  // namespace xssunit
