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

#include <cctype>
#include <map>
#include <random>
#include <regex>
#include <string>

#include <doctest.h>

#include "xssunit/attack_fsm.hpp"
#include "xssunit/encoders.hpp"
#include "xssunit/error.hpp"
#include "xssunit/html_tokenizer.hpp"

using namespace xssunit;

namespace {

// Independent per-character tables. Anything absent maps to itself.
const std::map<EncoderId, std::map<char, std::string>>& char_maps() {
  static const std::map<EncoderId, std::map<char, std::string>> maps = {
      {EncoderId::Identity, {}},
      {EncoderId::EscapeHtml, {{'&', "&amp;"}, {'<', "&lt;"}, {'>', "&gt;"}, {'"', "&quot;"}}},
      {EncoderId::EscapeHtmlFull,
       {{'&', "&amp;"}, {'<', "&lt;"}, {'>', "&gt;"}, {'"', "&quot;"}, {'\'', "&#x27;"}}},
      {EncoderId::EscapeJavaScript,
       {{'\'', "\\'"}, {'"', "\\\""}, {'\\', "\\\\"}, {'\n', "\\n"}, {'\r', "\\r"}, {'\t', "\\t"}}},
      {EncoderId::EscapeHtmlDecimal,
       {{'&', "&#38;"}, {'<', "&#60;"}, {'>', "&#62;"}, {'"', "&#34;"}, {'\'', "&#39;"}}},
  };
  return maps;
}

std::string oracle_encode(EncoderId id, const std::string& in) {
  if (id == EncoderId::EscapeUrl) {
    std::string out;
    const char* hex = "0123456789ABCDEF";
    for (unsigned char c : in) {
      if (std::isalnum(c) || c == '.' || c == '_' || c == '~' || c == '-') {
        out += static_cast<char>(c);
      } else {
        out += '%';
        out += hex[c >> 4];
        out += hex[c & 15];
      }
    }
    return out;
  }
  const auto& table = char_maps().at(id);
  std::string out;
  for (char c : in) {
    auto it = table.find(c);
    out += it == table.end() ? std::string(1, c) : it->second;
  }
  return out;
}

std::string random_string(std::mt19937& rng) {
  static const std::string alphabet = "abcXYZ019 &<>\"';/()%#=\n\r\t`{}";
  std::uniform_int_distribution<int> len(0, 24);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> byte(0, 255);
  std::string s;
  for (int n = len(rng); n > 0; --n) {
    s += (n % 7 == 0) ? static_cast<char>(byte(rng)) : alphabet[pick(rng)];
  }
  return s;
}

}  // namespace

TEST_SUITE("encoders") {
  TEST_CASE("examples") {
    CHECK(encode(EncoderId::EscapeHtml, "<script> attack(); </script>") ==
          "&lt;script&gt; attack(); &lt;/script&gt;");
    CHECK(encode(EncoderId::EscapeHtml, "'); attack(); //") == "'); attack(); //");
    CHECK(encode(EncoderId::EscapeJavaScript, "'") == "\\'");
    CHECK(encode(EncoderId::EscapeHtmlDecimal, "'") == "&#39;");
    CHECK(encode(EncoderId::EscapeHtmlFull, "'") == "&#x27;");
    CHECK(encode(EncoderId::EscapeUrl, "a b/") == "a%20b%2F");
    for (auto id : all_encoders()) CHECK(encode(id, "").empty());
  }

  TEST_CASE("registry names") {
    CHECK(all_encoders().size() == 6);
    for (auto id : all_encoders()) CHECK(encoder_by_name(encoder_name(id)) == id);
    CHECK(encode("escapeHtml", "<") == "&lt;");
    CHECK_FALSE(find_encoder("escapeCss").has_value());
    try {
      encoder_by_name("escapeCss");
      FAIL("expected UnknownEncoder");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kUnknownEncoder);
    }
  }

  TEST_CASE("chain examples") {
    const auto wrong = EncoderChain::parse("escapeHtmlDecimal,escapeJavaScript");
    const auto right = EncoderChain::parse("escapeJavaScript, escapeHtmlDecimal");
    CHECK(apply_chain(wrong, "';attack();//") == "&#39;;attack();//");
    CHECK(apply_chain(right, "';attack();//") == "\\&#39;;attack();//");
    CHECK(right.to_string() == "escapeJavaScript,escapeHtmlDecimal");
    CHECK(apply_chain(EncoderChain::identity(), "<x y='z'>") == "<x y='z'>");
  }

  TEST_CASE("chain parsing errors") {
    try {
      EncoderChain::parse("");
      FAIL("expected EmptyChain");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kEmptyChain);
    }
    CHECK_THROWS_AS(EncoderChain({}), Error);
    CHECK_THROWS_AS(EncoderChain::parse("escapeHtml,bogus"), Error);
  }

  TEST_CASE("every encoder matches the char-map oracle") {
    std::mt19937 rng(7);
    for (int i = 0; i < 2000; ++i) {
      const auto s = random_string(rng);
      for (auto id : all_encoders()) {
        CAPTURE(encoder_name(id));
        CHECK(encode(id, s) == oracle_encode(id, s));
      }
    }
  }

  TEST_CASE("chains fold left to right") {
    std::mt19937 rng(11);
    const auto& ids = all_encoders();
    std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
    for (int i = 0; i < 500; ++i) {
      const auto s = random_string(rng);
      const EncoderId a = ids[pick(rng)], b = ids[pick(rng)], c = ids[pick(rng)];
      CHECK(apply_chain(EncoderChain({a}), s) == encode(a, s));
      CHECK(apply_chain(EncoderChain({a, b, c}), s) ==
            apply_chain(EncoderChain({c}), apply_chain(EncoderChain({a, b}), s)));
      CHECK(apply_chain(EncoderChain({a, b}), s) == oracle_encode(b, oracle_encode(a, s)));
    }
  }

  TEST_CASE("output properties") {
    std::mt19937 rng(13);
    const std::regex url_shape("^([A-Za-z0-9._~-]|%[0-9A-F]{2})*$");
    for (int i = 0; i < 2000; ++i) {
      const auto s = random_string(rng);
      const auto html = encode(EncoderId::EscapeHtml, s);
      CHECK(html.find_first_of("<>") == std::string::npos);
      CHECK(decode_entities(html) == s);

      const auto js = encode(EncoderId::EscapeJavaScript, s);
      for (std::size_t p = 0; p < js.size(); ++p) {
        if (js[p] == '\\') {
          ++p;
        } else {
          CHECK(js[p] != '\'');
          CHECK(js[p] != '"');
        }
      }

      auto dec = encode(EncoderId::EscapeHtmlDecimal, s);
      dec = std::regex_replace(dec, std::regex("&#[0-9]+;"), "");
      CHECK(dec.find_first_of("&<>\"'") == std::string::npos);

      CHECK(std::regex_match(encode(EncoderId::EscapeUrl, s), url_shape));

      for (auto id : all_encoders()) {
        CHECK(encode(id, s).size() >= s.size());
        CHECK(encode(id, s) == encode(id, s));
      }
    }
  }

  // escapeHtml encodes the double quote, so only single-quote breakouts pass
  // through it untouched.
  TEST_CASE("single-quote javascript attacks are fixed points of escapeHtml") {
    int fixed = 0;
    for (const auto& a : generate(default_machine(), {ContextKind::JavaScript})) {
      if (a.context.quote == QuoteKind::Single) {
        CHECK(encode(EncoderId::EscapeHtml, a.text) == a.text);
        ++fixed;
      } else {
        CHECK(encode(EncoderId::EscapeHtml, a.text) != a.text);
      }
    }
    CHECK(fixed == 9);
  }

  TEST_CASE("non-ascii bytes are percent encoded as utf-8") {
    CHECK(encode(EncoderId::EscapeUrl, "\xC3\xA9") == "%C3%A9");
    CHECK(encode(EncoderId::EscapeHtml, "\xC3\xA9") == "\xC3\xA9");
  }
}
