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

#include "augmitl/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "augmitl/error.hpp"
#include "augmitl/text.hpp"

namespace augmitl {

ReferenceModel::ReferenceModel(TrainConfig cfg, const Corpus& corpus)
    : cfg_(cfg) {
  if (!(cfg_.alpha > 0.0)) throw InvalidArgument("train: alpha must be > 0");
  if (corpus.empty()) throw InvalidArgument("train: empty corpus");

  const auto intent_counts = corpus.intent_counts();
  for (const auto& [label, n] : intent_counts) labels_.push_back(label);
  const std::size_t n_labels = labels_.size();

  std::unordered_map<std::string, std::vector<std::size_t>> counts;
  std::vector<std::size_t> totals(n_labels, 0);
  for (const Utterance& u : corpus.utterances()) {
    const std::size_t li = label_index(u.intent);
    for (std::string& f : features(u.text)) {
      auto& row = counts[f];
      if (row.empty()) row.assign(n_labels, 0);
      ++row[li];
      ++totals[li];
    }
  }

  const auto n_docs = static_cast<double>(corpus.size());
  for (const auto& [label, n] : intent_counts) {
    log_priors_[label] = std::log(static_cast<double>(n) / n_docs);
  }

  const auto slots = static_cast<double>(counts.size() + 1);
  std::vector<double> log_denominator(n_labels);
  unk_loglik_.resize(n_labels);
  for (std::size_t li = 0; li < n_labels; ++li) {
    log_denominator[li] =
        std::log(static_cast<double>(totals[li]) + cfg_.alpha * slots);
    unk_loglik_[li] = std::log(cfg_.alpha) - log_denominator[li];
  }
  for (auto& [feature, row] : counts) {
    std::vector<double> ll(n_labels);
    for (std::size_t li = 0; li < n_labels; ++li) {
      ll[li] = std::log(static_cast<double>(row[li]) + cfg_.alpha) -
               log_denominator[li];
    }
    vocab_.insert(feature);
    loglik_.emplace(feature, std::move(ll));
  }
}

std::size_t ReferenceModel::label_index(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw InvalidArgument("unknown label: " + label);
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::string> ReferenceModel::features(std::string_view t) const {
  std::vector<std::string> tokens;
  for (std::string_view tok : text::split_whitespace(t)) {
    tokens.push_back(cfg_.lowercase ? text::to_lower(tok) : std::string(tok));
  }
  std::vector<std::string> out = tokens;
  if (cfg_.features == FeatureSet::kUnigramBigram) {
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      out.push_back(tokens[i - 1] + " " + tokens[i]);
    }
  }
  return out;
}

double ReferenceModel::log_likelihood(const std::string& label,
                                      const std::string& feature) const {
  const std::size_t li = label_index(label);
  auto it = loglik_.find(feature);
  return it == loglik_.end() ? unk_loglik_[li] : it->second[li];
}

double ReferenceModel::unk_log_likelihood(const std::string& label) const {
  return unk_loglik_[label_index(label)];
}

Prediction ReferenceModel::predict(std::string_view t) const {
  const std::size_t n_labels = labels_.size();
  std::vector<double> score(n_labels);
  for (std::size_t li = 0; li < n_labels; ++li) {
    score[li] = log_priors_.at(labels_[li]);
  }
  for (const std::string& f : features(t)) {
    auto it = loglik_.find(f);
    const std::vector<double>& ll =
        it == loglik_.end() ? unk_loglik_ : it->second;
    for (std::size_t li = 0; li < n_labels; ++li) score[li] += ll[li];
  }

  const double top = *std::max_element(score.begin(), score.end());
  std::vector<double> p(n_labels);
  double z = 0.0;
  for (std::size_t li = 0; li < n_labels; ++li) {
    p[li] = std::exp(score[li] - top);
    z += p[li];
  }
  Prediction pred;
  std::size_t best = 0;
  for (std::size_t li = 0; li < n_labels; ++li) {
    p[li] /= z;
    // labels_ is sorted, so strict > keeps the smallest label on ties.
    if (p[li] > p[best]) best = li;
    pred.distribution.emplace(labels_[li], p[li]);
  }
  pred.label = labels_[best];
  pred.confidence = p[best];
  return pred;
}

std::vector<Prediction> ReferenceModel::classify(
    std::span<const std::string> texts) const {
  std::vector<Prediction> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(predict(t));
  return out;
}

ReferenceModel train(const TrainConfig& cfg, const Corpus& corpus) {
  return ReferenceModel(cfg, corpus);
}

Prediction predict(const ReferenceModel& model, std::string_view text) {
  return model.predict(text);
}

EvalReport evaluate(const IntentClassifier& model, const Corpus& test) {
  if (test.empty()) throw InvalidArgument("evaluate: empty test corpus");
  std::vector<std::string> texts;
  std::vector<std::string> gold;
  for (const Utterance& u : test.utterances()) {
    if (!u.is_seed()) {
      throw InvalidArgument("evaluate: test corpus contains paraphrase " + u.id);
    }
    texts.push_back(u.text);
    gold.push_back(u.intent);
  }
  std::vector<Prediction> preds = model.classify(texts);
  if (preds.size() != texts.size()) {
    throw ProtocolError("evaluate: classifier returned " +
                        std::to_string(preds.size()) + " predictions for " +
                        std::to_string(texts.size()) + " texts");
  }
  std::vector<std::string> predicted;
  predicted.reserve(preds.size());
  for (Prediction& p : preds) predicted.push_back(std::move(p.label));
  return score_labels(gold, predicted);
}

std::unique_ptr<IntentClassifier> ReferenceBackend::train(
    const Corpus& corpus) const {
  return std::make_unique<ReferenceModel>(cfg_, corpus);
}

}  // namespace augmitl
