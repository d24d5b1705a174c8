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

#include "augmitl/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "augmitl/error.hpp"
#include "augmitl/random.hpp"
#include "augmitl/text.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace augmitl;

namespace {

Corpus parse(const std::string& s) {
  std::istringstream in(s);
  return parse_corpus(in);
}

Corpus counts_corpus(const std::map<std::string, std::size_t>& counts) {
  std::vector<Utterance> us;
  for (const auto& [intent, n] : counts) {
    for (std::size_t i = 0; i < n; ++i) {
      us.push_back(fixtures::seed(intent + std::to_string(i), "w" + std::to_string(i), intent));
    }
  }
  return Corpus("c", std::move(us));
}

std::map<std::string, std::size_t> intent_counts_of(const Corpus& c,
                                                    const std::set<std::string>& ids) {
  std::map<std::string, std::size_t> out;
  for (const Utterance& u : c.utterances()) {
    if (ids.count(u.id)) ++out[u.intent];
  }
  return out;
}

// Random corpus with entities, paraphrases and awkward characters.
Corpus random_corpus(std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<std::string> words = {"plant", "ten", "fl\xC3\xB6wers", "\"q\"",
                                          "a\\b", "\xE2\x9C\xBF", "yes"};
  std::vector<Utterance> us;
  const auto n = static_cast<std::size_t>(rng.uniform_int(0, 12));
  for (std::size_t i = 0; i < n; ++i) {
    Utterance u;
    u.id = "id" + std::to_string(i);
    u.intent = "intent" + std::to_string(rng.uniform_index(3));
    std::vector<std::string> toks;
    const auto len = static_cast<std::size_t>(rng.uniform_int(1, 5));
    for (std::size_t t = 0; t < len; ++t) toks.push_back(words[rng.uniform_index(words.size())]);
    std::size_t cp = 0;
    for (std::size_t t = 0; t < toks.size(); ++t) {
      if (t) {
        u.text += ' ';
        ++cp;
      }
      const std::size_t tlen = text::codepoint_count(toks[t]);
      if (rng.bernoulli(0.3)) u.entities.push_back({cp, cp + tlen, "e", toks[t]});
      u.text += toks[t];
      cp += tlen;
    }
    if (i > 0 && rng.bernoulli(0.3) && us.front().is_seed()) {
      u.origin = Origin::paraphrase(us.front().id);
    }
    us.push_back(std::move(u));
  }
  return Corpus("corpus", std::move(us));
}

}  // namespace

TEST_CASE("parse_corpus: minimal line") {
  Corpus c = parse(R"({"id":"u1","text":"yes","intent":"affirm"})" "\n");
  REQUIRE(c.size() == 1);
  CHECK(c.intents() == std::set<std::string>{"affirm"});
  CHECK(c.utterances()[0].is_seed());
}

TEST_CASE("parse_corpus: empty stream gives an empty corpus") {
  CHECK(parse("").empty());
}

TEST_CASE("parse_corpus: entity span over its substring is accepted") {
  Corpus c = parse(
      R"({"id":"u1","text":"plant ten flowers","intent":"plant","entities":[{"start":6,"end":9,"entity":"number","value":"ten"}]})");
  REQUIRE(c.utterances()[0].entities.size() == 1);
  CHECK(c.utterances()[0].entities[0].value == "ten");
}

TEST_CASE("parse_corpus: errors") {
  SUBCASE("malformed line names its line number") {
    try {
      parse("{\"id\":\"u1\",\"text\":\"a\",\"intent\":\"x\"}\n{oops\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("missing field") {
    CHECK_THROWS_AS(parse(R"({"id":"u1","text":"a"})"), ParseError);
  }
  SUBCASE("duplicate id") {
    CHECK_THROWS_AS(parse("{\"id\":\"u1\",\"text\":\"a\",\"intent\":\"x\"}\n"
                          "{\"id\":\"u1\",\"text\":\"b\",\"intent\":\"x\"}\n"),
                    IntegrityError);
  }
  SUBCASE("span out of bounds") {
    CHECK_THROWS_AS(
        parse(R"({"id":"u1","text":"ten","intent":"x","entities":[{"start":1,"end":9,"entity":"n","value":"en"}]})"),
        IntegrityError);
  }
  SUBCASE("span value mismatch") {
    CHECK_THROWS_AS(
        parse(R"({"id":"u1","text":"ten","intent":"x","entities":[{"start":0,"end":3,"entity":"n","value":"two"}]})"),
        IntegrityError);
  }
  SUBCASE("overlapping spans") {
    CHECK_THROWS_AS(
        parse(R"({"id":"u1","text":"ten","intent":"x","entities":[{"start":0,"end":2,"entity":"n","value":"te"},{"start":1,"end":3,"entity":"n","value":"en"}]})"),
        IntegrityError);
  }
  SUBCASE("paraphrase of an unknown seed") {
    CHECK_THROWS_AS(
        parse(R"({"id":"p1","text":"hi","intent":"x","origin":{"paraphrase_of":"nope"}})"),
        IntegrityError);
  }
}

TEST_CASE("write_corpus: empty corpus writes nothing") {
  CHECK(write_corpus(Corpus()).empty());
}

TEST_CASE("write_corpus: paraphrase origin round-trips") {
  Corpus c("corpus", {fixtures::seed("s1", "hello there", "greet")});
  Utterance p = fixtures::seed("p1", "hi there", "greet");
  p.origin = Origin::paraphrase("s1");
  c.push_back(p);
  const std::string out = write_corpus(c);
  CHECK(out.find(R"("origin":{"paraphrase_of":"s1"})") != std::string::npos);
  CHECK(parse(out) == c);
}

TEST_CASE("property: parse(write(c)) == c") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Corpus c = random_corpus(seed);
    c.validate();
    CHECK(parse(write_corpus(c)) == c);
  }
}

TEST_CASE("corpus_stats: hand-counted example") {
  CorpusStats s = corpus_stats(fixtures::tiny());
  CHECK(s.n_intents == 2);
  CHECK(s.n_samples == 3);
  CHECK(s.min_samples_per_intent == 1);
  CHECK(s.max_samples_per_intent == 2);
  CHECK(s.avg_samples_per_intent == doctest::Approx(1.5));
  CHECK(s.total_tokens == 4);
  CHECK(s.avg_tokens_per_sample == doctest::Approx(4.0 / 3.0));
  CHECK(s.vocab_size == 4);
  CHECK(s.min_tokens_per_sample == 1);
  CHECK(s.max_tokens_per_sample == 2);
}

TEST_CASE("corpus_stats: single one-token utterance") {
  CorpusStats s = corpus_stats(Corpus("c", {fixtures::seed("u", "a", "x")}));
  CHECK(s.vocab_size == 1);
  CHECK(s.min_tokens_per_sample == 1);
  CHECK(s.max_tokens_per_sample == 1);
  CHECK(s.avg_tokens_per_sample == 1.0);
}

TEST_CASE("corpus_stats: vocabulary is case-insensitive") {
  CorpusStats s = corpus_stats(Corpus("c", {fixtures::seed("u", "Yes yes YES", "x")}));
  CHECK(s.vocab_size == 1);
  CHECK(s.total_tokens == 3);
}

TEST_CASE("corpus_stats: planting-shaped counts") {
  CorpusStats s = corpus_stats(fixtures::planting_shape());
  CHECK(s.n_intents == 14);
  CHECK(s.n_samples == 1927);
  CHECK(s.min_samples_per_intent == 22);
  CHECK(s.max_samples_per_intent == 555);
  CHECK(std::round(s.avg_samples_per_intent * 10.0) / 10.0 == 137.6);
}

TEST_CASE("corpus_stats: empty corpus is an error") {
  CHECK_THROWS_AS(corpus_stats(Corpus()), InvalidArgument);
}

TEST_CASE("property: corpus_stats orderings and sums") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Corpus c = random_corpus(seed);
    if (c.empty()) continue;
    CorpusStats s = corpus_stats(c);
    CHECK(s.min_samples_per_intent <= s.avg_samples_per_intent);
    CHECK(s.avg_samples_per_intent <= s.max_samples_per_intent);
    CHECK(s.min_tokens_per_sample <= s.avg_tokens_per_sample);
    CHECK(s.avg_tokens_per_sample <= s.max_tokens_per_sample);
    std::size_t sum = 0;
    for (const auto& [intent, n] : s.samples_per_intent) sum += n;
    CHECK(sum == s.n_samples);
  }
}

TEST_CASE("make_folds: one intent, ten samples, k=5") {
  FoldPlan plan = make_folds(counts_corpus({{"a", 10}}), 5, 42);
  REQUIRE(plan.folds.size() == 5);
  std::set<std::string> all;
  for (const auto& f : plan.folds) {
    CHECK(f.size() == 2);
    all.insert(f.begin(), f.end());
  }
  CHECK(all.size() == 10);
}

TEST_CASE("make_folds: stratification puts one of each intent in every fold") {
  Corpus c = counts_corpus({{"a", 4}, {"b", 4}});
  FoldPlan plan = make_folds(c, 4, 3);
  for (const auto& f : plan.folds) {
    auto counts = intent_counts_of(c, f);
    CHECK(counts["a"] == 1);
    CHECK(counts["b"] == 1);
  }
}

TEST_CASE("make_folds: deterministic, and only seeds are partitioned") {
  Corpus c = fixtures::separable({});
  CHECK(make_folds(c, 5, 9) == make_folds(c, 5, 9));
  CHECK_FALSE(make_folds(c, 5, 9) == make_folds(c, 5, 10));

  Utterance p = fixtures::seed("para", "x", "intent0");
  p.origin = Origin::paraphrase(c.utterances()[0].id);
  c.push_back(p);
  for (const auto& f : make_folds(c, 5, 9).folds) CHECK(f.count("para") == 0);
}

TEST_CASE("make_folds: errors") {
  Corpus c = counts_corpus({{"a", 3}});
  CHECK_THROWS_AS(make_folds(c, 1, 0), InvalidArgument);
  CHECK_THROWS_AS(make_folds(c, 4, 0), InvalidArgument);
}

TEST_CASE("property: fold plans are disjoint, covering and balanced") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(seed);
    std::map<std::string, std::size_t> counts;
    const auto n_intents = rng.uniform_int(1, 6);
    for (std::int64_t i = 0; i < n_intents; ++i) {
      counts["i" + std::to_string(i)] = static_cast<std::size_t>(rng.uniform_int(1, 30));
    }
    Corpus c = counts_corpus(counts);
    if (c.size() < 2) continue;
    const auto k = static_cast<std::size_t>(
        rng.uniform_int(2, static_cast<std::int64_t>(std::min<std::size_t>(c.size(), 10))));
    FoldPlan plan = make_folds(c, k, seed);
    std::set<std::string> all;
    std::size_t total = 0;
    for (const auto& f : plan.folds) {
      all.insert(f.begin(), f.end());
      total += f.size();
    }
    CHECK(total == c.size());
    CHECK(all.size() == c.size());
    for (const auto& [intent, n] : counts) {
      std::size_t lo = SIZE_MAX, hi = 0;
      for (const auto& f : plan.folds) {
        const std::size_t m = intent_counts_of(c, f)[intent];
        lo = std::min(lo, m);
        hi = std::max(hi, m);
      }
      CHECK(hi - lo <= 1);
    }
  }
}

TEST_CASE("split_train_test: sizes and stratification") {
  {
    TrainTestSplit s = split_train_test(counts_corpus({{"a", 10}}), 0.2, 1);
    CHECK(s.test.size() == 2);
    CHECK(s.train.size() == 8);
  }
  {
    TrainTestSplit s = split_train_test(counts_corpus({{"a", 5}, {"b", 5}}), 0.2, 1);
    CHECK(s.test.intent_counts() == std::map<std::string, std::size_t>{{"a", 1}, {"b", 1}});
  }
}

TEST_CASE("split_train_test: disjoint, covering and deterministic") {
  Corpus c = fixtures::noisy({});
  TrainTestSplit a = split_train_test(c, 0.2, 11);
  TrainTestSplit b = split_train_test(c, 0.2, 11);
  CHECK(a.train == b.train);
  CHECK(a.test == b.test);
  std::set<std::string> ids;
  for (const auto& u : a.train.utterances()) ids.insert(u.id);
  for (const auto& u : a.test.utterances()) CHECK(ids.insert(u.id).second);
  CHECK(ids.size() == c.size());
}

TEST_CASE("split_train_test: fraction outside (0,1)") {
  CHECK_THROWS_AS(split_train_test(fixtures::tiny(), 0.0, 1), InvalidArgument);
  CHECK_THROWS_AS(split_train_test(fixtures::tiny(), 1.0, 1), InvalidArgument);
}

TEST_CASE("subsample_training: rounding and minimum rules") {
  Corpus c = counts_corpus({{"a", 10}, {"b", 10}});
  CHECK(subsample_training(c, 1.0, 5) == c);
  CHECK(subsample_training(c, 0.5, 5).intent_counts() ==
        std::map<std::string, std::size_t>{{"a", 5}, {"b", 5}});
  CHECK(subsample_training(counts_corpus({{"a", 2}}), 0.1, 5).size() == 1);
  CHECK_THROWS_AS(subsample_training(c, 0.0, 5), InvalidArgument);
  CHECK_THROWS_AS(subsample_training(c, 1.5, 5), InvalidArgument);
}

TEST_CASE("property: subsamples nest across fractions") {
  Corpus c = fixtures::noisy({});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::set<std::string> prev;
    for (double f = 0.1; f <= 1.0001; f += 0.1) {
      std::set<std::string> cur;
      const Corpus sub = subsample_training(c, std::min(f, 1.0), seed);
      for (const auto& u : sub.utterances()) {
        cur.insert(u.id);
      }
      CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      prev = std::move(cur);
    }
  }
}
