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
#include "xssunit/error.hpp"
#include "xssunit/js_lexer.hpp"

namespace xssunit {
namespace {

std::optional<QuoteKind> string_quote(std::string_view code) {
  switch (lex_js(code).final_state) {
    case JsLexState::SingleQuoteString: return QuoteKind::Single;
    case JsLexState::DoubleQuoteString: return QuoteKind::Double;
    default: return std::nullopt;
  }
}

}  // namespace

StartContext detect_context(std::string_view html_template, std::string_view placeholder,
                            OracleOptions options) {
  const auto at = html_template.find(placeholder);
  if (placeholder.empty() || at == std::string_view::npos) {
    throw Error(ErrorCode::kPlaceholderMissing,
                "placeholder " + std::string(placeholder) + " not found in template");
  }
  if (html_template.find(placeholder, at + placeholder.size()) != std::string_view::npos) {
    throw Error(ErrorCode::kPlaceholderDuplicated,
                "placeholder " + std::string(placeholder) + " occurs more than once");
  }

  HtmlTokenizer tokenizer(html_template, TokenizerOptions{options.legacy});
  tokenizer.advance_to(at);

  switch (tokenizer.state()) {
    case TokenizerState::BeforeAttrValue:
    case TokenizerState::AttrValueDouble:
    case TokenizerState::AttrValueSingle:
    case TokenizerState::AttrValueBacktick:
    case TokenizerState::AttrValueUnquoted: {
      const Attribute* attr = tokenizer.current_attribute();
      if (attr && attr->name.size() > 2 && attr->name.starts_with("on")) {
        if (auto q = string_quote(decode_entities(attr->value))) return StartContext::javascript(*q);
      }
      return StartContext::attribute_value();
    }
    case TokenizerState::TagName:
    case TokenizerState::BeforeAttrName:
    case TokenizerState::AttrName:
    case TokenizerState::AfterAttrName:
    case TokenizerState::AfterAttrValueQuoted:
    case TokenizerState::SelfClosingStartTag:
      return StartContext::attribute_value();
    case TokenizerState::RawText:
      if (tokenizer.raw_text_element() == "script") {
        if (auto q = string_quote(tokenizer.raw_text_so_far())) return StartContext::javascript(*q);
      }
      // Outside a literal the way out of a script body is </script>, which
      // is what the tag-content attacks carry.
      return StartContext::tag_content();
    case TokenizerState::Data:
    case TokenizerState::TagOpen:
    case TokenizerState::EndTagOpen:
    case TokenizerState::Comment:
    case TokenizerState::BogusComment:
      return StartContext::tag_content();
  }
  return StartContext::tag_content();
}

}  // namespace xssunit
