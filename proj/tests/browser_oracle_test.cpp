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

#include <random>
#include <string>

#include <doctest.h>

#include "xssunit/attack_fsm.hpp"
#include "xssunit/browser_oracle.hpp"
#include "xssunit/canonical.hpp"
#include "xssunit/encoders.hpp"
#include "xssunit/error.hpp"
#include "xssunit/harness.hpp"

using namespace xssunit;

namespace {

std::vector<ScriptRegion> regions_of(std::string_view doc, bool legacy = false) {
  return collect_script_regions(tokenize(doc, {legacy}));
}

bool fires(std::string_view doc, bool legacy = false) {
  return interpret(doc, kDefaultSentinel, {legacy}).fired();
}

std::string inject(std::string_view tmpl, std::string_view value) {
  std::string out(tmpl);
  out.replace(out.find(kPlaceholder), kPlaceholder.size(), value);
  return out;
}

}  // namespace

TEST_SUITE("browser_oracle") {
  TEST_CASE("region collection") {
    auto r = regions_of("<a onclick=\"attack();\">");
    REQUIRE(r.size() == 1);
    CHECK(r[0].source == RegionSource::EventHandlerAttribute);
    CHECK(r[0].attribute == "onclick");
    CHECK(r[0].code == "attack();");

    r = regions_of("<a href=\" javascript:attack();\">");
    REQUIRE(r.size() == 1);
    CHECK(r[0].source == RegionSource::JavascriptUrl);
    CHECK(r[0].code == "attack();");

    r = regions_of("<input onclick=\"fn('&#39;;attack();//')\">");
    REQUIRE(r.size() == 1);
    CHECK(r[0].code == "fn('';attack();//')");

    r = regions_of("<img SRC=JaVaScRiPt:attack();>");
    REQUIRE(r.size() == 1);
    CHECK(r[0].source == RegionSource::JavascriptUrl);

    r = regions_of("<a href=\"java&#x09;script:attack();\">");
    REQUIRE(r.size() == 1);
    CHECK(r[0].code == "attack();");
  }

  TEST_CASE("css regions") {
    auto r = regions_of("<a style=expression('attack();')>");
    REQUIRE(r.size() == 1);
    CHECK(r[0].source == RegionSource::CssExpression);
    CHECK(r[0].legacy);
    CHECK(r[0].code == "attack();");

    r = regions_of("<a style=url('javascript:attack();')>");
    REQUIRE(r.size() == 1);
    CHECK(r[0].source == RegionSource::JavascriptUrl);
    CHECK(r[0].code == "attack();");

    r = regions_of("<style>p { width: expression(attack()); }</style>");
    REQUIRE(r.size() == 1);
    CHECK(r[0].source == RegionSource::CssExpression);
  }

  TEST_CASE("interpret examples") {
    CHECK_FALSE(fires("<p>&lt;script&gt;attack();&lt;/script&gt;</p>"));
    const auto t = interpret("<p><script>attack();</script></p>");
    REQUIRE(t.executed.size() == 1);
    CHECK(t.regions[t.executed[0].region].source == RegionSource::ScriptElementBody);
    CHECK(fires("<a href=\"javascript:void(0)\" onclick=\"action('a'); attack(); //');\">mylink</a>"));
  }

  TEST_CASE("legacy regions run only in legacy mode") {
    const std::string doc = "<a style=expression('attack();')>";
    CHECK_FALSE(fires(doc));
    CHECK(fires(doc, true));
  }

  TEST_CASE("every event handler fires") {
    const auto t = interpret("<a onmouseover=\"attack()\">x</a><b onclick=\"attack()\">");
    CHECK(t.executed.size() == 2);
  }

  TEST_CASE("transduction asymmetry") {
    // attribute-sourced code is entity decoded
    CHECK(fires("<a onclick=\"&#97;ttack();\">"));
    CHECK(fires("<a href=\"javascript:&#97;ttack();\">"));
    // script bodies are not
    CHECK_FALSE(fires("<script>&#97;ttack();</script>"));
    CHECK(fires("<a onclick=\"x('&#39;);attack();//')\">"));
    CHECK_FALSE(fires("<script>x('&#39;);attack();//')</script>"));
  }

  TEST_CASE("entity inertness in tag content") {
    std::mt19937 rng(99);
    const std::string alphabet = "<>/'\"=; ()scriptattackonclickhrefjavascript:";
    std::uniform_int_distribution<int> len(0, 40);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int i = 0; i < 3000; ++i) {
      std::string s;
      for (int n = len(rng); n > 0; --n) s += alphabet[pick(rng)];
      CAPTURE(s);
      CHECK_FALSE(fires("<p>" + encode(EncoderId::EscapeHtml, s) + "</p>", true));
    }
    for (const auto& a : generate(default_machine(), {ContextKind::AttributeValue,
                                                      ContextKind::TagContent,
                                                      ContextKind::JavaScript})) {
      CHECK_FALSE(fires("<p>" + encode(EncoderId::EscapeHtml, a.text) + "</p>", true));
    }
  }

  TEST_CASE("detect context") {
    CHECK(detect_context("<input onclick=\"Fn('{{INJECT}}');\" type='button' />", kPlaceholder) ==
          StartContext::javascript(QuoteKind::Single));
    CHECK(detect_context("<a onclick='Fn(\"{{INJECT}}\");'>", kPlaceholder) ==
          StartContext::javascript(QuoteKind::Double));
    CHECK(detect_context("<p>{{INJECT}}</p>", kPlaceholder) == StartContext::tag_content());
    CHECK(detect_context("<input value='{{INJECT}}'>", kPlaceholder) ==
          StartContext::attribute_value());
    CHECK(detect_context("<a onclick=\"action({{INJECT}});\">", kPlaceholder) ==
          StartContext::attribute_value());
    CHECK(detect_context("<title>{{INJECT}}</title>", kPlaceholder) == StartContext::tag_content());
    CHECK(detect_context("<textarea>{{INJECT}}</textarea>", kPlaceholder) ==
          StartContext::tag_content());
    CHECK(detect_context("<script>var a = '{{INJECT}}';</script>", kPlaceholder) ==
          StartContext::javascript(QuoteKind::Single));
    CHECK(detect_context("<script>var a = \"{{INJECT}}\";</script>", kPlaceholder) ==
          StartContext::javascript(QuoteKind::Double));
    CHECK(detect_context("<script>var a = {{INJECT}};</script>", kPlaceholder) ==
          StartContext::tag_content());
  }

  TEST_CASE("detect context placeholder errors") {
    auto code_of = [](std::string_view tmpl) {
      try {
        detect_context(tmpl, kPlaceholder);
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::kIo;
    };
    CHECK(code_of("<p></p>") == ErrorCode::kPlaceholderMissing);
    CHECK(code_of("<p>{{INJECT}}{{INJECT}}</p>") == ErrorCode::kPlaceholderDuplicated);
  }

  TEST_CASE("completeness: every attack executes raw in its matching template") {
    const auto all = generate(default_machine(), {ContextKind::AttributeValue,
                                                  ContextKind::TagContent,
                                                  ContextKind::JavaScript});
    for (const auto& a : all) {
      const auto doc = inject(matching_template(a), a.text);
      CAPTURE(doc);
      CHECK(fires(doc, a.legacy));
    }
  }

  TEST_CASE("canonical templates") {
    CHECK(canonical_template(StartContext::tag_content()) == "<p>{{INJECT}}</p>");
    for (auto ctx : {StartContext::attribute_value(), StartContext::tag_content(),
                     StartContext::javascript(QuoteKind::Single),
                     StartContext::javascript(QuoteKind::Double)}) {
      CHECK(detect_context(canonical_template(ctx), kPlaceholder) == ctx);
    }
  }

  TEST_CASE("trace json") {
    const auto j = trace_to_json(interpret("<script>attack();</script>"));
    CHECK(j["sentinel"] == "attack");
    CHECK(j["executed"].size() == 1);
    CHECK(j["regions"][0]["source"] == "ScriptElementBody");
  }
}
