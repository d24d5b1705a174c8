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

#include <chrono>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "augmitl/corpus.hpp"
#include "augmitl/metrics.hpp"

namespace augmitl {

// A label with its confidence. `distribution` holds the full posterior when
// the backend exposes one (the reference model does; remote backends only
// report label and confidence, leaving it empty).
struct Prediction {
  std::string label;
  double confidence = 0.0;
  std::map<std::string, double> distribution;
};

// A trained intent model. Implementations are immutable after training and
// safe for concurrent classify() calls.
class IntentClassifier {
 public:
  virtual ~IntentClassifier() = default;
  virtual std::vector<Prediction> classify(
      std::span<const std::string> texts) const = 0;
};

// Something that can train an IntentClassifier from a corpus.
class ClassifierBackend {
 public:
  virtual ~ClassifierBackend() = default;
  virtual std::unique_ptr<IntentClassifier> train(const Corpus& corpus) const = 0;
  virtual std::string name() const = 0;
};

enum class FeatureSet { kUnigram, kUnigramBigram };

struct TrainConfig {
  double alpha = 1.0;
  FeatureSet features = FeatureSet::kUnigramBigram;
  bool lowercase = true;
};

// Multinomial naive Bayes with add-alpha smoothing. Each class's likelihoods
// range over the training vocabulary plus one UNK feature:
//   P(f | c) = (count(f, c) + alpha) / (total(c) + alpha * (|V| + 1))
class ReferenceModel : public IntentClassifier {
 public:
  ReferenceModel(TrainConfig cfg, const Corpus& corpus);

  Prediction predict(std::string_view text) const;
  std::vector<Prediction> classify(
      std::span<const std::string> texts) const override;

  // Feature strings extracted from `text` under this model's config. Bigrams
  // are the two tokens joined by a single space.
  std::vector<std::string> features(std::string_view text) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::map<std::string, double>& class_log_priors() const {
    return log_priors_;
  }
  // Log P(feature | label); features outside the vocabulary map to UNK.
  double log_likelihood(const std::string& label,
                        const std::string& feature) const;
  double unk_log_likelihood(const std::string& label) const;
  const std::set<std::string>& vocab() const { return vocab_; }
  const TrainConfig& config() const { return cfg_; }

 private:
  std::size_t label_index(const std::string& label) const;

  TrainConfig cfg_;
  std::vector<std::string> labels_;  // sorted
  std::map<std::string, double> log_priors_;
  std::set<std::string> vocab_;
  std::unordered_map<std::string, std::vector<double>> loglik_;
  std::vector<double> unk_loglik_;
};

ReferenceModel train(const TrainConfig& cfg, const Corpus& corpus);
Prediction predict(const ReferenceModel& model, std::string_view text);

// Classifies every test utterance and scores the predictions.
EvalReport evaluate(const IntentClassifier& model, const Corpus& test);

class ReferenceBackend : public ClassifierBackend {
 public:
  explicit ReferenceBackend(TrainConfig cfg = {}) : cfg_(cfg) {}
  std::unique_ptr<IntentClassifier> train(const Corpus& corpus) const override;
  std::string name() const override { return "reference"; }

 private:
  TrainConfig cfg_;
};

struct HttpOptions {
  std::chrono::milliseconds connect_timeout{5000};
  std::chrono::milliseconds read_timeout{60000};
};

// Client for a classifier server speaking the /v1/train and /v1/classify
// protocol. `base_url` is e.g. "http://127.0.0.1:8080".
class RemoteClassifierBackend : public ClassifierBackend {
 public:
  explicit RemoteClassifierBackend(std::string base_url, HttpOptions opts = {});
  std::unique_ptr<IntentClassifier> train(const Corpus& corpus) const override;
  std::string name() const override { return "remote:" + base_url_; }

  static constexpr std::size_t kClassifyBatch = 256;

 private:
  std::string base_url_;
  HttpOptions opts_;
};

}  // namespace augmitl
