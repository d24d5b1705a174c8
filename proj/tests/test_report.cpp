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

#include "augmitl/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "augmitl/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"

using namespace augmitl;
using json = nlohmann::json;

namespace {

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("format_double: shortest round trip") {
  CHECK(report::format_double(0.1) == "0.1");
  CHECK(report::format_double(1.0) == "1");
  CHECK(report::format_double(2.0 / 3.0) == "0.6666666666666666");
  for (double x : {1e-300, 0.30000000000000004, 123456.789, -2.5}) {
    CHECK(std::stod(report::format_double(x)) == x);
  }
}

TEST_CASE("stats_json embeds the config") {
  const std::string out =
      report::stats_json(corpus_stats(fixtures::tiny()), R"({"corpus":"tiny.jsonl"})");
  json doc = json::parse(out);
  CHECK(doc["n_samples"] == 3);
  CHECK(doc["config"]["corpus"] == "tiny.jsonl");
  CHECK(doc["samples_per_intent"]["affirm"] == 2);
  CHECK_THROWS_AS(report::stats_json(corpus_stats(fixtures::tiny()), "{oops"), ConfigError);
}

TEST_CASE("cv reports: row counts and determinism") {
  Corpus c = fixtures::separable({});
  CVOptions opts;
  opts.k = 4;
  opts.runs = 2;
  CVReport r = cross_validate(c, std::nullopt, ReferenceBackend(), opts);
  const std::string csv = report::cv_csv(r);
  CHECK(count_lines(csv) == 1 + 2 * 4);
  CHECK(csv.rfind("run,fold,n_test,", 0) == 0);
  CHECK(report::cv_json(r, "{}") ==
        report::cv_json(cross_validate(c, std::nullopt, ReferenceBackend(), opts), "{}"));
  json doc = json::parse(report::cv_json(r, "{}"));
  CHECK(doc["grand_mean"] == 1.0);
  CHECK(doc["per_run"].size() == 2);
  CHECK(doc["per_run"][0]["folds"].size() == 4);
}

TEST_CASE("sweep reports: row counts grouped by variant") {
  Corpus c = fixtures::separable({});
  MockParaphraserConfig mcfg;
  mcfg.thesaurus = fixtures::separable_thesaurus({});
  MockParaphraser mock(mcfg);
  AugmentationPlan plan{&mock, 3, {}};
  SweepOptions opts;
  opts.fractions = {0.5, 1.0};
  opts.runs = 2;
  SweepReport r = sweep(c, {{"aug3", plan}}, ReferenceBackend(), opts);
  const std::string csv = report::sweep_csv(r);
  CHECK(count_lines(csv) == 1 + 2 * 2 * 2);
  const auto first_aug = csv.find("\naug3,");
  const auto last_original = csv.rfind("\noriginal,");
  CHECK(last_original < first_aug);
  json doc = json::parse(report::sweep_json(r, R"({"runs":2})"));
  CHECK(doc["variants"] == json::array({"original", "aug3"}));
  CHECK(doc["curves"]["aug3"].size() == 2);
}

TEST_CASE("augmentation_json lists every reject reason") {
  Corpus seeds("c", {fixtures::seed("s1", "hello there", "greet")});
  ParaphraseSet ps{{{"hello there", "s1", "greet", "t"}, {"hi there", "s1", "greet", "t"}}, 2};
  json doc = json::parse(report::augmentation_json(augment(seeds, ps, {}), "{}"));
  CHECK(doc["rejected"]["duplicate"] == 1);
  CHECK(doc["rejected"]["wrong_label"] == 0);
  CHECK(doc["rejected"]["low_confidence"] == 0);
  CHECK(doc["rejected"]["excluded_intent"] == 0);
}
