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

#include "augmitl/paraphrase.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "augmitl/error.hpp"
#include "augmitl/text.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace augmitl;
using fixtures::seed;

namespace {

ParaphraseCandidate cand(std::string text, std::string seed_id = "s1",
                         std::string intent = "x") {
  return {std::move(text), std::move(seed_id), std::move(intent), "test"};
}

std::vector<std::string> texts_of(const ParaphraseSet& ps) {
  std::vector<std::string> out;
  for (const auto& c : ps.candidates) out.push_back(c.text);
  return out;
}

MockParaphraserConfig noisy_config(double noise_rate, double drop_prob = 0.1) {
  MockParaphraserConfig cfg;
  cfg.thesaurus = fixtures::noisy_thesaurus({});
  cfg.noise_rate = noise_rate;
  cfg.drop_prob = drop_prob;
  cfg.seed = 99;
  return cfg;
}

}  // namespace

TEST_CASE("mock: thesaurus substitution") {
  MockParaphraserConfig cfg;
  cfg.thesaurus = {{"hello", {"hi"}}};
  MockParaphraser mock(cfg);
  Corpus c("c", {seed("s1", "hello there", "greet")});
  auto texts = texts_of(generate(mock, c, 3, 1));
  CHECK(texts.size() == 3);
  CHECK(std::count(texts.begin(), texts.end(), "hi there") >= 1);
}

TEST_CASE("mock: substitution matches keys case-insensitively") {
  MockParaphraserConfig cfg;
  cfg.thesaurus = {{"hello", {"hi"}}};
  cfg.substitution_prob = 1.0;
  MockParaphraser mock(cfg);
  Corpus c("c", {seed("s1", "Hello there", "greet")});
  CHECK(texts_of(generate(mock, c, 1, 1)) == std::vector<std::string>{"hi there"});
}

TEST_CASE("mock: determinism") {
  MockParaphraser mock(noisy_config(0.3));
  Corpus c = fixtures::noisy({});
  CHECK(generate(mock, c, 5, 12) == generate(mock, c, 5, 12));
  CHECK_FALSE(generate(mock, c, 5, 12) == generate(mock, c, 5, 13));
}

TEST_CASE("mock: candidates do not depend on corpus order") {
  MockParaphraser mock(noisy_config(0.3));
  Corpus c = fixtures::noisy({});
  std::vector<Utterance> reversed(c.utterances().rbegin(), c.utterances().rend());
  auto by_seed = [](const ParaphraseSet& ps) {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& x : ps.candidates) out[x.seed_id].push_back(x.text);
    return out;
  };
  CHECK(by_seed(generate(mock, c, 3, 4)) == by_seed(generate(mock, Corpus("c", reversed), 3, 4)));
}

TEST_CASE("mock: cardinality bound and provenance") {
  MockParaphraser mock(noisy_config(0.2));
  Corpus c = fixtures::tiny();
  c.push_back(seed("u4", "fine", "affirm"));
  ParaphraseSet ps = generate(mock, c, 5, 1);
  CHECK(ps.n_requested == 5);
  CHECK(ps.candidates.size() <= 20);
  for (const auto& x : ps.candidates) {
    const Utterance* u = c.find(x.seed_id);
    REQUIRE(u != nullptr);
    CHECK(x.seed_intent == u->intent);
    CHECK(x.backend == "mock");
    CHECK_FALSE(x.text.empty());
  }
}

TEST_CASE("mock: paraphrase-origin utterances are not expanded") {
  MockParaphraser mock(noisy_config(0.0));
  Corpus c = fixtures::tiny();
  Utterance p = seed("p", "yeah", "affirm");
  p.origin = Origin::paraphrase(c.utterances()[0].id);
  c.push_back(p);
  for (const auto& x : generate(mock, c, 2, 1).candidates) CHECK(x.seed_id != "p");
}

TEST_CASE("mock: invalid configuration") {
  MockParaphraserConfig cfg;
  cfg.noise_rate = 1.5;
  CHECK_THROWS_AS(MockParaphraser{cfg}, InvalidArgument);
  cfg.noise_rate = 0.0;
  cfg.thesaurus = {{"Hello", {"hi"}}};
  CHECK_THROWS_AS(MockParaphraser{cfg}, InvalidArgument);
}

TEST_CASE("generate: argument checks") {
  MockParaphraser mock({});
  CHECK_THROWS_AS(generate(mock, fixtures::tiny(), 0, 1), InvalidArgument);
  CHECK_THROWS_AS(generate(mock, Corpus(), 3, 1), InvalidArgument);
}

TEST_CASE("property: clean mock stays inside seed vocabulary plus replacements") {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    MockParaphraserConfig cfg = noisy_config(0.0, 0.3);
    MockParaphraser mock(cfg);
    Corpus c = fixtures::noisy({8, 25, s});
    for (const auto& x : generate(mock, c, 5, s).candidates) {
      std::set<std::string> allowed;
      for (const std::string& t : text::tokenize(c.find(x.seed_id)->text)) {
        allowed.insert(t);
        auto it = cfg.thesaurus.find(t);
        if (it != cfg.thesaurus.end()) allowed.insert(it->second.begin(), it->second.end());
      }
      for (const std::string& t : text::tokenize(x.text)) CHECK(allowed.count(t) == 1);
    }
  }
}

TEST_CASE("dedup: normalization against seeds") {
  Corpus c("c", {seed("s1", "plant ten flowers", "plant")});
  ParaphraseSet ps{{cand("Plant ten flowers.", "s1", "plant"), cand("plant 10 flowers", "s1", "plant")}, 2};
  CHECK(texts_of(dedup(c, ps)) == std::vector<std::string>{"plant 10 flowers"});
}

TEST_CASE("dedup: whitespace collapse keeps the first") {
  Corpus c("c", {seed("s1", "hello", "x")});
  ParaphraseSet ps{{cand("hi there"), cand("hi  there")}, 2};
  CHECK(texts_of(dedup(c, ps)) == std::vector<std::string>{"hi there"});
}

TEST_CASE("dedup: disjoint candidates pass unchanged") {
  Corpus c("c", {seed("s1", "hello", "x")});
  ParaphraseSet ps{{cand("a"), cand("b"), cand("c")}, 3};
  CHECK(dedup(c, ps) == ps);
}

TEST_CASE("dedup: cross-intent collisions drop every member") {
  Corpus c("c", {seed("s1", "hello", "x"), seed("s2", "bye", "y")});
  ParaphraseSet ps{{cand("same", "s1", "x"), cand("other", "s1", "x"), cand("Same!", "s2", "y")}, 2};
  CHECK(texts_of(dedup(c, ps)) == std::vector<std::string>{"other"});
}

TEST_CASE("property: dedup is idempotent and never keeps a seed text") {
  Corpus c = fixtures::noisy({});
  for (std::uint64_t s = 1; s <= 10; ++s) {
    MockParaphraser mock(noisy_config(0.3, 0.4));
    ParaphraseSet ps = generate(mock, c, 5, s);
    ParaphraseSet once = dedup(c, ps);
    CHECK(dedup(c, once) == once);

    std::set<std::string> seed_norms;
    for (const auto& u : c.utterances()) seed_norms.insert(text::normalize(u.text));
    std::set<std::string> seen;
    std::map<std::string, std::size_t> per_seed;
    for (const auto& x : once.candidates) {
      const std::string norm = text::normalize(x.text);
      CHECK(seed_norms.count(norm) == 0);
      CHECK(seen.insert(norm).second);
      ++per_seed[x.seed_id];
    }
    for (const auto& [id, n] : per_seed) CHECK(n <= ps.n_requested);

    // Kept candidates keep their relative order.
    std::size_t j = 0;
    for (const auto& x : ps.candidates) {
      if (j < once.candidates.size() && x == once.candidates[j]) ++j;
    }
    CHECK(j == once.candidates.size());
  }
}
