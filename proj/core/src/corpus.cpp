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
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "augmitl/error.hpp"
#include "augmitl/random.hpp"
#include "augmitl/text.hpp"
#include "json.hpp"

namespace augmitl {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Seed ids grouped by intent; intents in sorted order, ids in corpus order.
std::map<std::string, std::vector<std::string>> ids_by_intent(
    const Corpus& c, bool seeds_only) {
  std::map<std::string, std::vector<std::string>> groups;
  for (const Utterance& u : c.utterances()) {
    if (seeds_only && !u.is_seed()) continue;
    groups[u.intent].push_back(u.id);
  }
  return groups;
}

const json& require(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(line, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::string require_string(const json& obj, const char* key,
                           std::size_t line) {
  const json& v = require(obj, key, line);
  if (!v.is_string()) {
    throw ParseError(line, std::string("field \"") + key +
                               "\" must be a string");
  }
  return v.get<std::string>();
}

std::size_t require_offset(const json& obj, const char* key,
                           std::size_t line) {
  const json& v = require(obj, key, line);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ParseError(line, std::string("field \"") + key +
                               "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Utterance parse_utterance(const json& obj, std::size_t line) {
  if (!obj.is_object()) throw ParseError(line, "expected a JSON object");
  Utterance u;
  u.id = require_string(obj, "id", line);
  u.text = require_string(obj, "text", line);
  u.intent = require_string(obj, "intent", line);
  if (u.id.empty()) throw ParseError(line, "empty id");
  if (u.text.empty()) throw ParseError(line, "empty text");
  if (auto it = obj.find("entities"); it != obj.end()) {
    if (!it->is_array()) throw ParseError(line, "\"entities\" must be a list");
    for (const json& e : *it) {
      if (!e.is_object()) throw ParseError(line, "entity must be an object");
      EntitySpan span;
      span.start = require_offset(e, "start", line);
      span.end = require_offset(e, "end", line);
      span.entity_type = require_string(e, "entity", line);
      span.value = require_string(e, "value", line);
      u.entities.push_back(std::move(span));
    }
  }
  if (auto it = obj.find("origin"); it != obj.end()) {
    if (it->is_string() && it->get<std::string>() == "seed") {
      u.origin = Origin::seed();
    } else if (it->is_object() && it->contains("paraphrase_of") &&
               (*it)["paraphrase_of"].is_string()) {
      u.origin = Origin::paraphrase((*it)["paraphrase_of"].get<std::string>());
    } else {
      throw ParseError(line,
                       "\"origin\" must be \"seed\" or {\"paraphrase_of\": id}");
    }
  }
  return u;
}

void validate_spans(const Utterance& u) {
  const std::size_t len = text::codepoint_count(u.text);
  std::vector<const EntitySpan*> sorted;
  for (const EntitySpan& s : u.entities) {
    if (s.start >= s.end || s.end > len) {
      throw IntegrityError("utterance " + u.id + ": entity span [" +
                           std::to_string(s.start) + ", " +
                           std::to_string(s.end) + ") out of bounds");
    }
    if (text::codepoint_substr(u.text, s.start, s.end) != s.value) {
      throw IntegrityError("utterance " + u.id + ": entity value \"" +
                           s.value + "\" does not match its span");
    }
    sorted.push_back(&s);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const EntitySpan* a, const EntitySpan* b) {
              return a->start < b->start;
            });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i]->start < sorted[i - 1]->end) {
      throw IntegrityError("utterance " + u.id + ": overlapping entity spans");
    }
  }
}

}  // namespace

Corpus::Corpus(std::string name, std::vector<Utterance> utterances)
    : name_(std::move(name)), utterances_(std::move(utterances)) {}

std::set<std::string> Corpus::intents() const {
  std::set<std::string> out;
  for (const Utterance& u : utterances_) out.insert(u.intent);
  return out;
}

std::map<std::string, std::size_t> Corpus::intent_counts() const {
  std::map<std::string, std::size_t> out;
  for (const Utterance& u : utterances_) ++out[u.intent];
  return out;
}

Corpus Corpus::seeds() const {
  std::vector<Utterance> out;
  for (const Utterance& u : utterances_) {
    if (u.is_seed()) out.push_back(u);
  }
  return Corpus(name_, std::move(out));
}

const Utterance* Corpus::find(const std::string& id) const {
  for (const Utterance& u : utterances_) {
    if (u.id == id) return &u;
  }
  return nullptr;
}

void Corpus::validate() const {
  std::unordered_map<std::string, const Utterance*> by_id;
  for (const Utterance& u : utterances_) {
    if (!by_id.emplace(u.id, &u).second) {
      throw IntegrityError("duplicate utterance id: " + u.id);
    }
    if (u.text.empty()) throw IntegrityError("utterance " + u.id + ": empty text");
    validate_spans(u);
  }
  for (const Utterance& u : utterances_) {
    if (u.is_seed()) continue;
    auto it = by_id.find(*u.origin.paraphrase_of);
    if (it == by_id.end() || !it->second->is_seed()) {
      throw IntegrityError("utterance " + u.id +
                           ": paraphrase_of does not reference a seed id: " +
                           *u.origin.paraphrase_of);
    }
  }
}

Corpus Corpus::filter_ids(const std::set<std::string>& ids) const {
  std::vector<Utterance> out;
  for (const Utterance& u : utterances_) {
    if (ids.count(u.id)) out.push_back(u);
  }
  return Corpus(name_, std::move(out));
}

Corpus parse_corpus(std::istream& in, CorpusFormat /*format*/,
                    std::string name) {
  Corpus c(std::move(name));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(line_no, std::string("malformed JSON: ") + e.what());
    }
    c.push_back(parse_utterance(obj, line_no));
  }
  c.validate();
  return c;
}

Corpus read_corpus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus file: " + path);
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  return parse_corpus(in, CorpusFormat::kJsonl, name);
}

std::string write_corpus(const Corpus& c, CorpusFormat /*format*/) {
  std::string out;
  for (const Utterance& u : c.utterances()) {
    ordered_json obj;
    obj["id"] = u.id;
    obj["text"] = u.text;
    obj["intent"] = u.intent;
    ordered_json entities = ordered_json::array();
    for (const EntitySpan& s : u.entities) {
      ordered_json e;
      e["start"] = s.start;
      e["end"] = s.end;
      e["entity"] = s.entity_type;
      e["value"] = s.value;
      entities.push_back(std::move(e));
    }
    obj["entities"] = std::move(entities);
    if (u.is_seed()) {
      obj["origin"] = "seed";
    } else {
      obj["origin"] = ordered_json{{"paraphrase_of", *u.origin.paraphrase_of}};
    }
    out += obj.dump();
    out += '\n';
  }
  return out;
}

CorpusStats corpus_stats(const Corpus& c) {
  if (c.empty()) throw InvalidArgument("corpus_stats: empty corpus");
  CorpusStats s;
  s.samples_per_intent = c.intent_counts();
  s.n_intents = s.samples_per_intent.size();
  s.n_samples = c.size();
  s.min_samples_per_intent = SIZE_MAX;
  for (const auto& [intent, n] : s.samples_per_intent) {
    s.min_samples_per_intent = std::min(s.min_samples_per_intent, n);
    s.max_samples_per_intent = std::max(s.max_samples_per_intent, n);
  }
  s.avg_samples_per_intent =
      static_cast<double>(s.n_samples) / static_cast<double>(s.n_intents);

  std::unordered_set<std::string> vocab;
  s.min_tokens_per_sample = SIZE_MAX;
  for (const Utterance& u : c.utterances()) {
    std::vector<std::string> toks = text::tokenize(u.text);
    s.total_tokens += toks.size();
    s.min_tokens_per_sample = std::min(s.min_tokens_per_sample, toks.size());
    s.max_tokens_per_sample = std::max(s.max_tokens_per_sample, toks.size());
    vocab.insert(toks.begin(), toks.end());
  }
  s.vocab_size = vocab.size();
  s.avg_tokens_per_sample =
      static_cast<double>(s.total_tokens) / static_cast<double>(s.n_samples);
  return s;
}

FoldPlan make_folds(const Corpus& c, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw InvalidArgument("make_folds: k must be >= 2");
  auto groups = ids_by_intent(c, /*seeds_only=*/true);
  std::size_t n = 0;
  for (const auto& [intent, ids] : groups) n += ids.size();
  if (k > n) {
    throw InvalidArgument("make_folds: k=" + std::to_string(k) +
                          " exceeds the number of seed samples (" +
                          std::to_string(n) + ")");
  }
  FoldPlan plan;
  plan.k = k;
  plan.seed = seed;
  plan.folds.resize(k);
  Rng rng(seed);
  // The dealing position carries over between intents so fold sizes stay
  // balanced overall, not only per intent.
  std::size_t next_fold = 0;
  for (auto& [intent, ids] : groups) {
    rng.shuffle(ids);
    for (const std::string& id : ids) {
      plan.folds[next_fold].insert(id);
      next_fold = (next_fold + 1) % k;
    }
  }
  return plan;
}

TrainTestSplit split_train_test(const Corpus& c, double test_fraction,
                                std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw InvalidArgument("split_train_test: test_fraction must be in (0, 1)");
  }
  auto groups = ids_by_intent(c, /*seeds_only=*/false);
  Rng rng(seed);
  std::set<std::string> test_ids;
  for (auto& [intent, ids] : groups) {
    rng.shuffle(ids);
    auto n_test = static_cast<std::size_t>(
        std::llround(test_fraction * static_cast<double>(ids.size())));
    n_test = std::min(n_test, ids.size() - 1);
    test_ids.insert(ids.begin(), ids.begin() + static_cast<long>(n_test));
  }
  TrainTestSplit split;
  std::vector<Utterance> train;
  std::vector<Utterance> test;
  for (const Utterance& u : c.utterances()) {
    (test_ids.count(u.id) ? test : train).push_back(u);
  }
  split.train = Corpus(c.name(), std::move(train));
  split.test = Corpus(c.name(), std::move(test));
  return split;
}

Corpus subsample_training(const Corpus& train, double fraction,
                          std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw InvalidArgument("subsample_training: fraction must be in (0, 1]");
  }
  auto groups = ids_by_intent(train, /*seeds_only=*/false);
  Rng rng(seed);
  std::set<std::string> keep;
  for (auto& [intent, ids] : groups) {
    // Shuffle first, independent of fraction, so prefixes nest.
    rng.shuffle(ids);
    auto n = static_cast<std::size_t>(
        std::llround(fraction * static_cast<double>(ids.size())));
    n = std::clamp<std::size_t>(n, 1, ids.size());
    keep.insert(ids.begin(), ids.begin() + static_cast<long>(n));
  }
  return train.filter_ids(keep);
}

}  // namespace augmitl
