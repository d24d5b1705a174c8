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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace augmitl {

// Typed span inside an utterance. Offsets count Unicode code points.
struct EntitySpan {
  std::size_t start = 0;  // inclusive
  std::size_t end = 0;    // exclusive
  std::string entity_type;
  std::string value;

  friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
  friend auto operator<=>(const EntitySpan&, const EntitySpan&) = default;
};

// Provenance of an utterance: a human-authored seed, or a paraphrase of one.
struct Origin {
  std::optional<std::string> paraphrase_of;

  static Origin seed() { return {}; }
  static Origin paraphrase(std::string parent_id) {
    return Origin{std::move(parent_id)};
  }
  bool is_seed() const { return !paraphrase_of.has_value(); }

  friend bool operator==(const Origin&, const Origin&) = default;
};

struct Utterance {
  std::string id;
  std::string text;
  std::string intent;
  std::vector<EntitySpan> entities;
  Origin origin;

  bool is_seed() const { return origin.is_seed(); }

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::string name, std::vector<Utterance> utterances = {});

  const std::string& name() const { return name_; }
  const std::vector<Utterance>& utterances() const { return utterances_; }
  std::size_t size() const { return utterances_.size(); }
  bool empty() const { return utterances_.empty(); }

  // Sorted set of intent labels present.
  std::set<std::string> intents() const;

  // Utterances per intent label (all origins).
  std::map<std::string, std::size_t> intent_counts() const;

  // Sub-corpus of seed-origin utterances, order preserved.
  Corpus seeds() const;

  const Utterance* find(const std::string& id) const;

  // Throws IntegrityError on duplicate ids, invalid spans, or a paraphrase
  // origin that does not point at a seed in this corpus.
  void validate() const;

  // Appends without validation; call validate() once done.
  void push_back(Utterance u) { utterances_.push_back(std::move(u)); }

  // Keeps utterances whose id is in `ids`, preserving order.
  Corpus filter_ids(const std::set<std::string>& ids) const;

  friend bool operator==(const Corpus&, const Corpus&) = default;

 private:
  std::string name_;
  std::vector<Utterance> utterances_;
};

struct CorpusStats {
  std::size_t n_intents = 0;
  std::size_t n_samples = 0;
  std::size_t min_samples_per_intent = 0;
  std::size_t max_samples_per_intent = 0;
  double avg_samples_per_intent = 0.0;
  std::size_t vocab_size = 0;
  std::size_t total_tokens = 0;
  std::size_t min_tokens_per_sample = 0;
  std::size_t max_tokens_per_sample = 0;
  double avg_tokens_per_sample = 0.0;
  std::map<std::string, std::size_t> samples_per_intent;
};

struct FoldPlan {
  std::size_t k = 0;
  std::vector<std::set<std::string>> folds;
  std::uint64_t seed = 0;

  friend bool operator==(const FoldPlan&, const FoldPlan&) = default;
};

enum class CorpusFormat { kJsonl };

Corpus parse_corpus(std::istream& in, CorpusFormat format = CorpusFormat::kJsonl,
                    std::string name = "corpus");
Corpus read_corpus_file(const std::string& path);

std::string write_corpus(const Corpus& c,
                         CorpusFormat format = CorpusFormat::kJsonl);

CorpusStats corpus_stats(const Corpus& c);

// Stratified k-fold plan over seed-origin utterances.
FoldPlan make_folds(const Corpus& c, std::size_t k, std::uint64_t seed);

struct TrainTestSplit {
  Corpus train;
  Corpus test;
};

// Stratified split; per intent, round(test_fraction * count) samples go to
// test, capped so that training keeps at least one.
TrainTestSplit split_train_test(const Corpus& c, double test_fraction,
                                std::uint64_t seed);

// Stratified subsample keeping max(1, round(fraction * count)) per intent.
// Nested across fractions for a fixed seed.
Corpus subsample_training(const Corpus& train, double fraction,
                          std::uint64_t seed);

}  // namespace augmitl
