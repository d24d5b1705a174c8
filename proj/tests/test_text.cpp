//
// Copyright 2026 The augmitl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "augmitl/text.hpp"

#include "doctest.h"

using namespace augmitl;

TEST_CASE("normalize lowercases, collapses whitespace and strips terminal punctuation") {
  CHECK(text::normalize("Plant ten flowers.") == "plant ten flowers");
  CHECK(text::normalize("  hi   there  ") == "hi there");
  CHECK(text::normalize("really?!") == "really");
  CHECK(text::normalize("ok .") == "ok");
  CHECK(text::normalize("...") == "");
  CHECK(text::normalize("a.b") == "a.b");
}

TEST_CASE("tokenize splits on whitespace runs and lowercases") {
  auto toks = text::tokenize("No\tTHANKS \n ok");
  REQUIRE(toks.size() == 3);
  CHECK(toks[0] == "no");
  CHECK(toks[1] == "thanks");
  CHECK(toks[2] == "ok");
  CHECK(text::tokenize("   ").empty());
}

TEST_CASE("code point offsets over UTF-8") {
  const std::string s = "pflanz\xC3\xA9 ten";  // "pflanzé ten"
  CHECK(text::codepoint_count(s) == 11);
  CHECK(text::codepoint_substr(s, 8, 11) == "ten");
  CHECK(text::codepoint_substr(s, 6, 7) == "\xC3\xA9");
  CHECK_FALSE(text::codepoint_substr(s, 8, 12).has_value());
  CHECK(text::byte_to_codepoint(s, 9) == 8);
  CHECK(text::codepoint_to_byte(s, 11) == s.size());
}
