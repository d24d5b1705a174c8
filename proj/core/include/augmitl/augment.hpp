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
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "augmitl/classifier.hpp"
#include "augmitl/corpus.hpp"
#include "augmitl/paraphrase.hpp"

namespace augmitl {

enum class Strategy {
  kBaseline,    // every non-duplicate candidate
  kIncLow,      // only intents with fewer than low_sample_threshold seeds
  kExcShort,    // all but intents whose seeds average <= short_len_threshold tokens
  kSuccess,     // seed-trained model predicts the seed intent
  kSuccessConf, // ... with confidence >= conf_threshold
  kAllConf,     // any predicted intent with confidence >= conf_threshold
};

// CLI / config spelling: baseline | inc_low | exc_short | success |
// success_conf | all_conf.
std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);
bool is_mitl(Strategy s);

struct StrategyConfig {
  Strategy kind = Strategy::kBaseline;
  std::size_t low_sample_threshold = 50;
  double short_len_threshold = 3.0;
  double conf_threshold = 0.9;

  // Throws InvalidArgument when a threshold is out of range.
  void validate() const;
};

enum class RejectReason { kDuplicate, kWrongLabel, kLowConfidence, kExcludedIntent };
std::string_view reject_reason_name(RejectReason r);

struct AugmentationOutcome {
  Corpus corpus;  // seeds followed by accepted paraphrases
  std::map<std::string, std::size_t> accepted;      // per assigned intent
  std::map<RejectReason, std::size_t> rejected;
  // Indices into the input ParaphraseSet of every accepted candidate, in
  // order.
  std::vector<std::size_t> accepted_indices;

  std::size_t accepted_total() const;
  std::size_t rejected_total() const;
};

// Intents with strictly fewer than `threshold` seed samples.
std::set<std::string> select_low_sample_intents(const Corpus& c,
                                                std::size_t threshold);

// Intents whose mean tokens per seed sample is <= `threshold`.
std::set<std::string> select_short_intents(const Corpus& c, double threshold);

enum class FilterMode { kSuccess, kSuccessConf, kAllConf };

struct FilteredCandidate {
  ParaphraseCandidate candidate;
  std::string assigned_label;
};

// Per-candidate verdict of a MITL filter.
struct FilterVerdict {
  bool keep = false;
  std::string assigned_label;
  std::optional<RejectReason> reason;
  Prediction prediction;
};

std::vector<FilterVerdict> mitl_verdicts(
    const IntentClassifier& model,
    std::span<const ParaphraseCandidate> candidates, FilterMode mode,
    double tau);

// Kept candidates in input order.
std::vector<FilteredCandidate> mitl_filter(
    const IntentClassifier& model,
    std::span<const ParaphraseCandidate> candidates, FilterMode mode,
    double tau);

// Id given to the accepted candidate with index `index` in its set.
std::string paraphrase_id(const ParaphraseCandidate& c, std::size_t index);

// Stages, each rejecting with its own reason: dedup against the seeds and
// earlier candidates, strategy intent gating, then the MITL filter. `model`
// must be trained on exactly `seeds` for MITL strategies.
AugmentationOutcome augment(const Corpus& seeds, const ParaphraseSet& ps,
                            const StrategyConfig& cfg,
                            const IntentClassifier* model = nullptr);

}  // namespace augmitl
