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

#include <json.hpp>

#include <doctest.h>

#include "test_support.hpp"
#include "xssunit/js_lexer.hpp"

using namespace xssunit;

TEST_SUITE("js_lexer") {
  TEST_CASE("examples") {
    CHECK_FALSE(js_executes("attack", "var s = 'attack();';"));
    CHECK(js_executes("attack", "fn(''); attack(); //');"));
    CHECK_FALSE(js_executes("attack", "fn('\\';attack();//');"));
  }

  TEST_CASE("identifier boundaries") {
    CHECK_FALSE(js_executes("attack", "counterattack();"));
    CHECK_FALSE(js_executes("attack", "attacker();"));
    CHECK_FALSE(js_executes("attack", "$attack();"));
    CHECK(js_executes("attack", "x.attack();"));
    CHECK(js_executes("alert", "alert(1)"));
    CHECK_FALSE(js_executes("attack", ""));
  }

  TEST_CASE("final state and call positions") {
    CHECK(lex_js("x = 'abc").final_state == JsLexState::SingleQuoteString);
    CHECK(lex_js("x = \"abc").final_state == JsLexState::DoubleQuoteString);
    CHECK(lex_js("/* x").final_state == JsLexState::BlockComment);
    CHECK(lex_js("// x").final_state == JsLexState::LineComment);
    CHECK(lex_js("`x").final_state == JsLexState::TemplateString);
    CHECK(lex_js("a; b").final_state == JsLexState::Normal);
    const auto r = lex_js("attack(); 'attack()'; attack ()", "attack");
    CHECK(r.sentinel_calls == std::vector<std::size_t>{0, 22});
  }

  TEST_CASE("strings end at a raw newline") {
    CHECK(js_executes("attack", "var s = 'abc\nattack();"));
  }

  // Code that is not syntactically valid is lexed best effort. A real engine
  // refuses to run it at all, so these stay outside the differential suite.
  TEST_CASE("syntax-invalid code is judged lexically") {
    CHECK(js_executes("attack", "Fn('';attack();//');"));
    CHECK(js_executes("attack", "Fn('\\'';attack();//');"));
  }

  TEST_CASE("differential fixtures frozen from a real engine") {
    const auto doc = nlohmann::json::parse(
        xssunit::testing::slurp(xssunit::testing::test_data_dir() / "js_fixtures.json"));
    REQUIRE(doc.size() == 30);
    int agree = 0;
    for (const auto& f : doc) {
      const auto code = f.at("code").get<std::string>();
      CAPTURE(f.at("name").get<std::string>());
      CAPTURE(code);
      const bool expected = f.at("expected").get<bool>();
      CHECK(js_executes("attack", code) == expected);
      agree += js_executes("attack", code) == expected;
    }
    CHECK(agree == 30);
  }
}
