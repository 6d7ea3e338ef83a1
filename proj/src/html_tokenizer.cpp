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

#include "xssunit/html_tokenizer.hpp"

#include <algorithm>

namespace xssunit {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\f' || c == '\r'; }

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

char lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

bool is_raw_text_element(std::string_view name) {
  return name == "script" || name == "style" || name == "title" || name == "textarea";
}

bool starts_with(std::string_view s, std::size_t at, std::string_view prefix) {
  return s.size() >= at + prefix.size() && s.substr(at, prefix.size()) == prefix;
}

}  // namespace

const Attribute* HtmlEvent::attribute(std::string_view attr_name) const {
  for (const auto& a : attributes) {
    if (a.name == attr_name) return &a;
  }
  return nullptr;
}

HtmlTokenizer::HtmlTokenizer(std::string_view document, TokenizerOptions options)
    : doc_(document), options_(options) {}

std::string_view HtmlTokenizer::raw_text_so_far() const {
  if (state_ != TokenizerState::RawText) return {};
  return doc_.substr(raw_start_, pos_ - raw_start_);
}

void HtmlTokenizer::advance_to(std::size_t stop) {
  stop = std::min(stop, doc_.size());
  while (pos_ < stop) step();
}

void HtmlTokenizer::flush_text(std::size_t end) {
  if (end > text_start_) {
    HtmlEvent ev;
    ev.kind = HtmlEventKind::Text;
    ev.text = std::string(doc_.substr(text_start_, end - text_start_));
    ev.span = {text_start_, end};
    events_.push_back(std::move(ev));
  }
  text_start_ = end;
}

void HtmlTokenizer::begin_tag(HtmlEventKind kind) {
  tag_ = HtmlEvent{};
  tag_.kind = kind;
  attr_active_ = false;
}

void HtmlTokenizer::begin_attribute() {
  attr_ = Attribute{};
  attr_.span.begin = pos_;
  attr_active_ = true;
}

void HtmlTokenizer::commit_attribute() {
  if (!attr_active_) return;
  attr_active_ = false;
  if (attr_.span.end < attr_.span.begin) attr_.span.end = pos_;
  // Duplicate attribute names: the first occurrence wins.
  if (tag_.kind == HtmlEventKind::StartTag && tag_.attribute(attr_.name) == nullptr) {
    tag_.attributes.push_back(std::move(attr_));
  }
}

void HtmlTokenizer::emit_tag(std::size_t end) {
  commit_attribute();
  flush_text(tag_start_);
  tag_.span = {tag_start_, end};
  const bool raw = tag_.kind == HtmlEventKind::StartTag && !tag_.malformed &&
                   is_raw_text_element(tag_.name);
  if (raw) raw_name_ = tag_.name;
  events_.push_back(std::move(tag_));
  tag_ = HtmlEvent{};
  text_start_ = end;
  if (raw) {
    raw_start_ = end;
    state_ = TokenizerState::RawText;
  } else {
    state_ = TokenizerState::Data;
  }
}

void HtmlTokenizer::emit_comment(std::size_t body_end, std::size_t end, bool malformed) {
  flush_text(tag_start_);
  HtmlEvent ev;
  ev.kind = HtmlEventKind::Comment;
  ev.text = std::string(doc_.substr(comment_start_, body_end - comment_start_));
  ev.span = {tag_start_, end};
  ev.malformed = malformed;
  events_.push_back(std::move(ev));
  text_start_ = end;
  state_ = TokenizerState::Data;
}

bool HtmlTokenizer::at_raw_text_end() const {
  if (!starts_with(doc_, pos_, "</")) return false;
  std::size_t p = pos_ + 2;
  if (doc_.size() < p + raw_name_.size()) return false;
  for (std::size_t k = 0; k < raw_name_.size(); ++k) {
    if (lower(doc_[p + k]) != raw_name_[k]) return false;
  }
  p += raw_name_.size();
  return p < doc_.size() && (is_space(doc_[p]) || doc_[p] == '/' || doc_[p] == '>');
}

void HtmlTokenizer::step() {
  const char c = doc_[pos_];
  switch (state_) {
    case TokenizerState::Data:
      if (c == '<') {
        tag_start_ = pos_;
        state_ = TokenizerState::TagOpen;
      }
      ++pos_;
      return;

    case TokenizerState::TagOpen:
      if (c == '!') {
        if (starts_with(doc_, pos_, "!--")) {
          pos_ += 3;
          comment_start_ = pos_;
          state_ = TokenizerState::Comment;
        } else {
          ++pos_;
          comment_start_ = pos_;
          state_ = TokenizerState::BogusComment;
        }
      } else if (c == '/') {
        ++pos_;
        state_ = TokenizerState::EndTagOpen;
      } else if (is_alpha(c)) {
        begin_tag(HtmlEventKind::StartTag);
        state_ = TokenizerState::TagName;
      } else if (c == '?') {
        comment_start_ = pos_;
        state_ = TokenizerState::BogusComment;
      } else {
        // Not markup: the '<' stays part of the text run.
        state_ = TokenizerState::Data;
      }
      return;

    case TokenizerState::EndTagOpen:
      if (is_alpha(c)) {
        begin_tag(HtmlEventKind::EndTag);
        state_ = TokenizerState::TagName;
      } else if (c == '>') {
        // "</>" is dropped.
        flush_text(tag_start_);
        ++pos_;
        text_start_ = pos_;
        state_ = TokenizerState::Data;
      } else {
        comment_start_ = pos_;
        state_ = TokenizerState::BogusComment;
      }
      return;

    case TokenizerState::TagName:
      if (is_space(c)) {
        state_ = TokenizerState::BeforeAttrName;
      } else if (c == '/') {
        state_ = TokenizerState::SelfClosingStartTag;
      } else if (c == '>') {
        emit_tag(pos_ + 1);
      } else {
        tag_.name += lower(c);
      }
      ++pos_;
      return;

    case TokenizerState::BeforeAttrName:
      if (is_space(c)) {
        ++pos_;
      } else if (c == '/' || c == '>') {
        state_ = TokenizerState::AfterAttrName;
      } else if (c == '=') {
        begin_attribute();
        attr_.name += c;
        ++pos_;
        state_ = TokenizerState::AttrName;
      } else {
        begin_attribute();
        state_ = TokenizerState::AttrName;
      }
      return;

    case TokenizerState::AttrName:
      if (is_space(c) || c == '/' || c == '>') {
        attr_.span.end = pos_;
        state_ = TokenizerState::AfterAttrName;
      } else if (c == '=') {
        ++pos_;
        state_ = TokenizerState::BeforeAttrValue;
      } else {
        attr_.name += lower(c);
        ++pos_;
      }
      return;

    case TokenizerState::AfterAttrName:
      if (is_space(c)) {
        ++pos_;
      } else if (c == '/') {
        commit_attribute();
        ++pos_;
        state_ = TokenizerState::SelfClosingStartTag;
      } else if (c == '=') {
        ++pos_;
        state_ = TokenizerState::BeforeAttrValue;
      } else if (c == '>') {
        emit_tag(pos_ + 1);
        ++pos_;
      } else {
        commit_attribute();
        begin_attribute();
        state_ = TokenizerState::AttrName;
      }
      return;

    case TokenizerState::BeforeAttrValue:
      if (is_space(c)) {
        ++pos_;
      } else if (c == '"') {
        ++pos_;
        attr_.value_span = {pos_, pos_};
        state_ = TokenizerState::AttrValueDouble;
      } else if (c == '\'') {
        ++pos_;
        attr_.value_span = {pos_, pos_};
        state_ = TokenizerState::AttrValueSingle;
      } else if (c == '`' && options_.legacy) {
        ++pos_;
        attr_.value_span = {pos_, pos_};
        state_ = TokenizerState::AttrValueBacktick;
      } else if (c == '>') {
        attr_.span.end = pos_;
        emit_tag(pos_ + 1);
        ++pos_;
      } else {
        attr_.value_span = {pos_, pos_};
        state_ = TokenizerState::AttrValueUnquoted;
      }
      return;

    case TokenizerState::AttrValueDouble:
    case TokenizerState::AttrValueSingle:
    case TokenizerState::AttrValueBacktick: {
      const char quote = state_ == TokenizerState::AttrValueDouble   ? '"'
                         : state_ == TokenizerState::AttrValueSingle ? '\''
                                                                     : '`';
      if (c == quote) {
        attr_.value_span.end = pos_;
        ++pos_;
        attr_.span.end = pos_;
        commit_attribute();
        state_ = TokenizerState::AfterAttrValueQuoted;
      } else {
        attr_.value += c;
        ++pos_;
      }
      return;
    }

    case TokenizerState::AttrValueUnquoted:
      if (is_space(c)) {
        attr_.value_span.end = pos_;
        attr_.span.end = pos_;
        commit_attribute();
        ++pos_;
        state_ = TokenizerState::BeforeAttrName;
      } else if (c == '>') {
        attr_.value_span.end = pos_;
        attr_.span.end = pos_;
        emit_tag(pos_ + 1);
        ++pos_;
      } else {
        attr_.value += c;
        ++pos_;
      }
      return;

    case TokenizerState::AfterAttrValueQuoted:
      if (is_space(c)) {
        ++pos_;
        state_ = TokenizerState::BeforeAttrName;
      } else if (c == '/') {
        ++pos_;
        state_ = TokenizerState::SelfClosingStartTag;
      } else if (c == '>') {
        emit_tag(pos_ + 1);
        ++pos_;
      } else {
        state_ = TokenizerState::BeforeAttrName;
      }
      return;

    case TokenizerState::SelfClosingStartTag:
      if (c == '>') {
        tag_.self_closing = true;
        emit_tag(pos_ + 1);
        ++pos_;
      } else {
        state_ = TokenizerState::BeforeAttrName;
      }
      return;

    case TokenizerState::RawText:
      if (at_raw_text_end()) {
        HtmlEvent ev;
        ev.kind = HtmlEventKind::RawText;
        ev.name = raw_name_;
        ev.text = std::string(doc_.substr(raw_start_, pos_ - raw_start_));
        ev.span = {raw_start_, pos_};
        events_.push_back(std::move(ev));
        text_start_ = pos_;
        state_ = TokenizerState::Data;
      } else {
        ++pos_;
      }
      return;

    case TokenizerState::Comment:
      if (starts_with(doc_, pos_, "-->")) {
        emit_comment(pos_, pos_ + 3, false);
        pos_ += 3;
      } else if (pos_ == comment_start_ && c == '>') {
        emit_comment(pos_, pos_ + 1, false);
        ++pos_;
      } else if (pos_ == comment_start_ && starts_with(doc_, pos_, "->")) {
        emit_comment(pos_, pos_ + 2, false);
        pos_ += 2;
      } else {
        ++pos_;
      }
      return;

    case TokenizerState::BogusComment:
      if (c == '>') {
        emit_comment(pos_, pos_ + 1, false);
      }
      ++pos_;
      return;
  }
}

std::vector<HtmlEvent> HtmlTokenizer::finish() {
  if (finished_) return events_;
  advance_to(doc_.size());
  const std::size_t n = doc_.size();
  switch (state_) {
    case TokenizerState::Data:
    case TokenizerState::TagOpen:
    case TokenizerState::EndTagOpen:
      flush_text(n);
      break;
    case TokenizerState::RawText: {
      HtmlEvent ev;
      ev.kind = HtmlEventKind::RawText;
      ev.name = raw_name_;
      ev.text = std::string(doc_.substr(raw_start_));
      ev.span = {raw_start_, n};
      ev.malformed = true;
      events_.push_back(std::move(ev));
      break;
    }
    case TokenizerState::Comment:
    case TokenizerState::BogusComment:
      emit_comment(n, n, true);
      break;
    default:
      if (attr_active_) {
        attr_.span.end = n;
        if (attr_.value_span.end < attr_.value_span.begin) attr_.value_span.end = n;
      }
      tag_.malformed = true;
      emit_tag(n);
      break;
  }
  state_ = TokenizerState::Data;
  finished_ = true;
  return events_;
}

std::vector<HtmlEvent> tokenize(std::string_view document, TokenizerOptions options) {
  HtmlTokenizer tokenizer(document, options);
  return tokenizer.finish();
}

}  // namespace xssunit
