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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "augmitl/classifier.hpp"
#include "augmitl/corpus.hpp"

namespace augmitl {

struct ParaphraseCandidate {
  std::string text;
  std::string seed_id;
  std::string seed_intent;
  std::string backend;

  friend bool operator==(const ParaphraseCandidate&,
                         const ParaphraseCandidate&) = default;
};

struct ParaphraseSet {
  std::vector<ParaphraseCandidate> candidates;
  std::size_t n_requested = 0;

  friend bool operator==(const ParaphraseSet&, const ParaphraseSet&) = default;
};

class ParaphraserBackend {
 public:
  virtual ~ParaphraserBackend() = default;
  // Up to n candidates for every seed-origin utterance of `seeds`, in corpus
  // order.
  virtual ParaphraseSet generate(const Corpus& seeds, std::size_t n,
                                 std::uint64_t seed) const = 0;
  virtual std::string name() const = 0;
};

struct MockParaphraserConfig {
  std::map<std::string, std::vector<std::string>> thesaurus;  // lowercase keys
  double substitution_prob = 0.8;
  double drop_prob = 0.0;
  double noise_rate = 0.0;
  std::uint64_t seed = 0;
};

// Test double for a seq2seq paraphraser. Per candidate:
//   1. each thesaurus-key token is replaced by a random alternative with
//      probability substitution_prob;
//   2. each non-first token is dropped with probability drop_prob;
//   3. with probability noise_rate the candidate is instead a bag of 3-7
//      tokens drawn from the seed texts of a random other intent.
// Each seed utterance draws from its own stream derived from
// (config seed, call seed, utterance id), so output is independent of
// iteration order.
class MockParaphraser : public ParaphraserBackend {
 public:
  explicit MockParaphraser(MockParaphraserConfig cfg);
  ParaphraseSet generate(const Corpus& seeds, std::size_t n,
                         std::uint64_t seed) const override;
  std::string name() const override { return "mock"; }
  const MockParaphraserConfig& config() const { return cfg_; }

 private:
  MockParaphraserConfig cfg_;
};

// Client for POST /v1/paraphrase. Seeds are sent in batches of kBatchSize.
class RemoteParaphraser : public ParaphraserBackend {
 public:
  explicit RemoteParaphraser(std::string base_url, HttpOptions opts = {});
  ParaphraseSet generate(const Corpus& seeds, std::size_t n,
                         std::uint64_t seed) const override;
  std::string name() const override { return "remote:" + base_url_; }

  static constexpr std::size_t kBatchSize = 32;

 private:
  std::string base_url_;
  HttpOptions opts_;
};

// Validates arguments and delegates to the backend.
ParaphraseSet generate(const ParaphraserBackend& backend, const Corpus& corpus,
                       std::size_t n, std::uint64_t seed);

// keep[i] is false when candidate i normalizes to the text of any corpus
// utterance, to an earlier kept candidate, or to a candidate of a different
// intent (such collisions drop every member).
std::vector<bool> dedup_mask(const Corpus& corpus,
                             std::span<const ParaphraseCandidate> candidates);

ParaphraseSet dedup(const Corpus& corpus, const ParaphraseSet& ps);

}  // namespace augmitl
