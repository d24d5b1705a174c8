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

#include "augmitl/augment.hpp"

#include <unordered_set>

#include "augmitl/error.hpp"
#include "augmitl/text.hpp"

namespace augmitl {

namespace {

constexpr std::pair<Strategy, std::string_view> kStrategyNames[] = {
    {Strategy::kBaseline, "baseline"},
    {Strategy::kIncLow, "inc_low"},
    {Strategy::kExcShort, "exc_short"},
    {Strategy::kSuccess, "success"},
    {Strategy::kSuccessConf, "success_conf"},
    {Strategy::kAllConf, "all_conf"},
};

FilterMode filter_mode(Strategy s) {
  switch (s) {
    case Strategy::kSuccess:
      return FilterMode::kSuccess;
    case Strategy::kSuccessConf:
      return FilterMode::kSuccessConf;
    case Strategy::kAllConf:
      return FilterMode::kAllConf;
    default:
      throw ConfigError("strategy has no MITL filter");
  }
}

void check_tau(double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw InvalidArgument("confidence threshold must be in (0, 1]");
  }
}

}  // namespace

std::string_view strategy_name(Strategy s) {
  for (const auto& [k, name] : kStrategyNames) {
    if (k == s) return name;
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  for (const auto& [k, n] : kStrategyNames) {
    if (n == name) return k;
  }
  throw InvalidArgument("unknown strategy: " + std::string(name));
}

bool is_mitl(Strategy s) {
  return s == Strategy::kSuccess || s == Strategy::kSuccessConf ||
         s == Strategy::kAllConf;
}

void StrategyConfig::validate() const {
  if (low_sample_threshold == 0) {
    throw InvalidArgument("low_sample_threshold must be positive");
  }
  if (!(short_len_threshold > 0.0)) {
    throw InvalidArgument("short_len_threshold must be positive");
  }
  if (kind == Strategy::kSuccessConf || kind == Strategy::kAllConf) {
    check_tau(conf_threshold);
  }
}

std::string_view reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::kDuplicate:
      return "duplicate";
    case RejectReason::kWrongLabel:
      return "wrong_label";
    case RejectReason::kLowConfidence:
      return "low_confidence";
    case RejectReason::kExcludedIntent:
      return "excluded_intent";
  }
  return "unknown";
}

std::size_t AugmentationOutcome::accepted_total() const {
  std::size_t n = 0;
  for (const auto& [k, v] : accepted) n += v;
  return n;
}

std::size_t AugmentationOutcome::rejected_total() const {
  std::size_t n = 0;
  for (const auto& [k, v] : rejected) n += v;
  return n;
}

std::set<std::string> select_low_sample_intents(const Corpus& c,
                                                std::size_t threshold) {
  std::set<std::string> out;
  for (const auto& [intent, n] : c.seeds().intent_counts()) {
    if (n < threshold) out.insert(intent);
  }
  return out;
}

std::set<std::string> select_short_intents(const Corpus& c, double threshold) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> tokens_and_count;
  for (const Utterance& u : c.utterances()) {
    if (!u.is_seed()) continue;
    auto& [tokens, count] = tokens_and_count[u.intent];
    tokens += text::split_whitespace(u.text).size();
    ++count;
  }
  std::set<std::string> out;
  for (const auto& [intent, tc] : tokens_and_count) {
    const double mean =
        static_cast<double>(tc.first) / static_cast<double>(tc.second);
    if (mean <= threshold) out.insert(intent);
  }
  return out;
}

std::vector<FilterVerdict> mitl_verdicts(
    const IntentClassifier& model,
    std::span<const ParaphraseCandidate> candidates, FilterMode mode,
    double tau) {
  if (mode != FilterMode::kSuccess) check_tau(tau);
  std::vector<std::string> texts;
  texts.reserve(candidates.size());
  for (const ParaphraseCandidate& c : candidates) texts.push_back(c.text);
  std::vector<Prediction> preds = model.classify(texts);
  if (preds.size() != texts.size()) {
    throw ProtocolError("mitl_filter: classifier returned " +
                        std::to_string(preds.size()) + " predictions for " +
                        std::to_string(texts.size()) + " candidates");
  }

  std::vector<FilterVerdict> out(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    FilterVerdict& v = out[i];
    v.prediction = std::move(preds[i]);
    const bool same = v.prediction.label == candidates[i].seed_intent;
    const bool confident = v.prediction.confidence >= tau;
    switch (mode) {
      case FilterMode::kSuccess:
        if (!same) v.reason = RejectReason::kWrongLabel;
        v.assigned_label = candidates[i].seed_intent;
        break;
      case FilterMode::kSuccessConf:
        if (!same) {
          v.reason = RejectReason::kWrongLabel;
        } else if (!confident) {
          v.reason = RejectReason::kLowConfidence;
        }
        v.assigned_label = candidates[i].seed_intent;
        break;
      case FilterMode::kAllConf:
        if (!confident) v.reason = RejectReason::kLowConfidence;
        v.assigned_label = v.prediction.label;
        break;
    }
    v.keep = !v.reason.has_value();
  }
  return out;
}

std::vector<FilteredCandidate> mitl_filter(
    const IntentClassifier& model,
    std::span<const ParaphraseCandidate> candidates, FilterMode mode,
    double tau) {
  std::vector<FilterVerdict> verdicts =
      mitl_verdicts(model, candidates, mode, tau);
  std::vector<FilteredCandidate> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (verdicts[i].keep) {
      out.push_back({candidates[i], std::move(verdicts[i].assigned_label)});
    }
  }
  return out;
}

std::string paraphrase_id(const ParaphraseCandidate& c, std::size_t index) {
  return c.seed_id + "~p" + std::to_string(index);
}

AugmentationOutcome augment(const Corpus& seeds, const ParaphraseSet& ps,
                            const StrategyConfig& cfg,
                            const IntentClassifier* model) {
  cfg.validate();
  if (is_mitl(cfg.kind) && model == nullptr) {
    throw ConfigError("strategy " + std::string(strategy_name(cfg.kind)) +
                      " requires a classifier trained on the seeds");
  }
  const auto& cands = ps.candidates;
  const std::size_t n = cands.size();
  std::vector<std::optional<RejectReason>> reason(n);
  std::vector<std::string> label(n);
  std::unordered_set<std::string> seed_ids;
  for (const Utterance& u : seeds.utterances()) {
    if (u.is_seed()) seed_ids.insert(u.id);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (seed_ids.count(cands[i].seed_id) == 0) {
      throw IntegrityError("candidate references unknown seed id: " +
                           cands[i].seed_id);
    }
    label[i] = cands[i].seed_intent;
  }

  // Dedup runs before every filter so that the accepted sets of stricter
  // strategies stay subsets of looser ones.
  const std::vector<bool> unique = dedup_mask(seeds, cands);
  for (std::size_t i = 0; i < n; ++i) {
    if (!unique[i]) reason[i] = RejectReason::kDuplicate;
  }

  std::set<std::string> gated;
  bool include_gated = false;
  if (cfg.kind == Strategy::kIncLow) {
    gated = select_low_sample_intents(seeds, cfg.low_sample_threshold);
    include_gated = true;
  } else if (cfg.kind == Strategy::kExcShort) {
    gated = select_short_intents(seeds, cfg.short_len_threshold);
  }
  if (cfg.kind == Strategy::kIncLow || cfg.kind == Strategy::kExcShort) {
    for (std::size_t i = 0; i < n; ++i) {
      if (reason[i]) continue;
      const bool listed = gated.count(cands[i].seed_intent) != 0;
      if (listed != include_gated) {
        reason[i] = RejectReason::kExcludedIntent;
      }
    }
  }

  if (is_mitl(cfg.kind)) {
    std::vector<std::size_t> pending;
    std::vector<ParaphraseCandidate> batch;
    for (std::size_t i = 0; i < n; ++i) {
      if (reason[i]) continue;
      pending.push_back(i);
      batch.push_back(cands[i]);
    }
    std::vector<FilterVerdict> verdicts = mitl_verdicts(
        *model, batch, filter_mode(cfg.kind), cfg.conf_threshold);
    for (std::size_t j = 0; j < pending.size(); ++j) {
      reason[pending[j]] = verdicts[j].reason;
      label[pending[j]] = std::move(verdicts[j].assigned_label);
    }
  }

  AugmentationOutcome out;
  std::vector<Utterance> utterances = seeds.utterances();
  for (std::size_t i = 0; i < n; ++i) {
    if (reason[i]) {
      ++out.rejected[*reason[i]];
      continue;
    }
    ++out.accepted[label[i]];
    out.accepted_indices.push_back(i);
    Utterance u;
    u.id = paraphrase_id(cands[i], i);
    u.text = cands[i].text;
    u.intent = label[i];
    u.origin = Origin::paraphrase(cands[i].seed_id);
    utterances.push_back(std::move(u));
  }
  out.corpus = Corpus(seeds.name(), std::move(utterances));
  out.corpus.validate();
  return out;
}

}  // namespace augmitl
