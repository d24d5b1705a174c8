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

#include <algorithm>

#include "augmitl/classifier.hpp"
#include "augmitl/entity.hpp"
#include "augmitl/error.hpp"
#include "augmitl/paraphrase.hpp"
#include "augmitl/text.hpp"
#include "http_client.hpp"

namespace augmitl {

namespace {

using json = nlohmann::json;

json utterance_json(const Utterance& u) {
  json entities = json::array();
  for (const EntitySpan& s : u.entities) {
    entities.push_back(
        {{"start", s.start}, {"end", s.end}, {"entity", s.entity_type}, {"value", s.value}});
  }
  json obj = {{"id", u.id}, {"text", u.text}, {"intent", u.intent}, {"entities", entities}};
  if (u.is_seed()) {
    obj["origin"] = "seed";
  } else {
    obj["origin"] = {{"paraphrase_of", *u.origin.paraphrase_of}};
  }
  return obj;
}

class RemoteModel : public IntentClassifier {
 public:
  RemoteModel(detail::JsonHttpClient client, std::string model_id)
      : client_(std::move(client)), model_id_(std::move(model_id)) {}

  std::vector<Prediction> classify(
      std::span<const std::string> texts) const override {
    std::vector<Prediction> out;
    out.reserve(texts.size());
    for (std::size_t begin = 0; begin < texts.size();
         begin += RemoteClassifierBackend::kClassifyBatch) {
      const std::size_t end =
          std::min(texts.size(), begin + RemoteClassifierBackend::kClassifyBatch);
      json req = {{"model_id", model_id_},
                  {"texts", std::vector<std::string>(texts.begin() + begin,
                                                     texts.begin() + end)}};
      json res = client_.post("/v1/classify", req);
      if (!res.contains("predictions") || !res["predictions"].is_array() ||
          res["predictions"].size() != end - begin) {
        throw ProtocolError("/v1/classify: predictions not aligned with texts");
      }
      for (const json& p : res["predictions"]) {
        Prediction pred;
        try {
          pred.label = p.at("label").get<std::string>();
          pred.confidence = p.at("confidence").get<double>();
        } catch (const json::exception& e) {
          throw ProtocolError(std::string("/v1/classify: bad prediction: ") + e.what());
        }
        if (!(pred.confidence >= 0.0 && pred.confidence <= 1.0)) {
          throw ProtocolError("/v1/classify: confidence outside [0, 1]");
        }
        out.push_back(std::move(pred));
      }
    }
    return out;
  }

 private:
  detail::JsonHttpClient client_;
  std::string model_id_;
};

}  // namespace

RemoteClassifierBackend::RemoteClassifierBackend(std::string base_url,
                                                 HttpOptions opts)
    : base_url_(std::move(base_url)), opts_(opts) {}

std::unique_ptr<IntentClassifier> RemoteClassifierBackend::train(
    const Corpus& corpus) const {
  if (corpus.empty()) throw InvalidArgument("train: empty corpus");
  detail::JsonHttpClient client(base_url_, opts_);
  json lines = json::array();
  for (const Utterance& u : corpus.utterances()) lines.push_back(utterance_json(u));
  json res = client.post("/v1/train", {{"corpus", lines}});
  if (!res.contains("model_id") || !res["model_id"].is_string()) {
    throw ProtocolError("/v1/train: response lacks a string model_id");
  }
  return std::make_unique<RemoteModel>(client, res["model_id"].get<std::string>());
}

RemoteParaphraser::RemoteParaphraser(std::string base_url, HttpOptions opts)
    : base_url_(std::move(base_url)), opts_(opts) {}

ParaphraseSet RemoteParaphraser::generate(const Corpus& seeds, std::size_t n,
                                          std::uint64_t /*seed*/) const {
  detail::JsonHttpClient client(base_url_, opts_);
  std::vector<const Utterance*> todo;
  for (const Utterance& u : seeds.utterances()) {
    if (u.is_seed()) todo.push_back(&u);
  }
  ParaphraseSet out;
  out.n_requested = n;
  for (std::size_t begin = 0; begin < todo.size(); begin += kBatchSize) {
    const std::size_t end = std::min(todo.size(), begin + kBatchSize);
    std::vector<std::string> texts;
    std::vector<std::string> ids;
    for (std::size_t i = begin; i < end; ++i) {
      texts.push_back(todo[i]->text);
      ids.push_back(todo[i]->id);
    }
    json res;
    try {
      res = client.post("/v1/paraphrase", {{"texts", texts}, {"n", n}});
    } catch (const TransportError& e) {
      throw TransportError(e.what(), ids);
    }
    const json* lists = res.contains("paraphrases") ? &res["paraphrases"] : nullptr;
    if (lists == nullptr || !lists->is_array() || lists->size() != texts.size()) {
      throw ProtocolError("/v1/paraphrase: paraphrases not aligned with texts");
    }
    for (std::size_t i = 0; i < texts.size(); ++i) {
      const json& inner = (*lists)[i];
      if (!inner.is_array() || inner.size() > n) {
        throw ProtocolError("/v1/paraphrase: entry " + std::to_string(i) +
                            " is not a list of at most n strings");
      }
      for (const json& s : inner) {
        if (!s.is_string()) {
          throw ProtocolError("/v1/paraphrase: non-string paraphrase");
        }
        std::string t = s.get<std::string>();
        if (text::trim(t).empty()) continue;
        const Utterance& u = *todo[begin + i];
        out.candidates.push_back({std::move(t), u.id, u.intent, name()});
      }
    }
  }
  return out;
}

RemoteKnowledgeGraph::RemoteKnowledgeGraph(std::string base_url,
                                           HttpOptions opts)
    : base_url_(std::move(base_url)), opts_(opts) {}

double RemoteKnowledgeGraph::relatedness(std::string_view a,
                                         std::string_view b) const {
  std::pair<std::string, std::string> key{std::string(a), std::string(b)};
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  detail::JsonHttpClient client(base_url_, opts_);
  json res = client.get("/relatedness?node1=" + detail::url_encode(a) +
                        "&node2=" + detail::url_encode(b));
  if (!res.contains("value") || !res["value"].is_number()) {
    throw ProtocolError("/relatedness: response lacks a numeric value");
  }
  const double v = res["value"].get<double>();
  if (!(v >= -1.0 && v <= 1.0)) {
    throw ProtocolError("/relatedness: value outside [-1, 1]");
  }
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(std::move(key), v);
  return v;
}

std::size_t RemoteKnowledgeGraph::cache_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.size();
}

}  // namespace augmitl
