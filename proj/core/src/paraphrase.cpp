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

#include "augmitl/paraphrase.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "augmitl/error.hpp"
#include "augmitl/random.hpp"
#include "augmitl/text.hpp"

namespace augmitl {

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument(std::string("mock paraphraser: ") + name +
                          " must be in [0, 1]");
  }
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

}  // namespace

MockParaphraser::MockParaphraser(MockParaphraserConfig cfg)
    : cfg_(std::move(cfg)) {
  check_probability(cfg_.substitution_prob, "substitution_prob");
  check_probability(cfg_.drop_prob, "drop_prob");
  check_probability(cfg_.noise_rate, "noise_rate");
  for (const auto& [key, alternatives] : cfg_.thesaurus) {
    if (key != text::to_lower(key)) {
      throw InvalidArgument("mock paraphraser: thesaurus key not lowercase: " +
                            key);
    }
    if (alternatives.empty()) {
      throw InvalidArgument("mock paraphraser: empty replacement list for " +
                            key);
    }
  }
}

ParaphraseSet MockParaphraser::generate(const Corpus& seeds, std::size_t n,
                                        std::uint64_t seed) const {
  // Token pools per intent for noise injection, sorted so that candidates do
  // not depend on corpus order.
  std::map<std::string, std::vector<std::string>> pools;
  for (const Utterance& u : seeds.utterances()) {
    if (!u.is_seed()) continue;
    auto& pool = pools[u.intent];
    for (std::string_view tok : text::split_whitespace(u.text)) {
      pool.emplace_back(tok);
    }
  }
  std::vector<std::string> intents;
  for (auto& [intent, pool] : pools) {
    std::sort(pool.begin(), pool.end());
    if (!pool.empty()) intents.push_back(intent);
  }

  ParaphraseSet out;
  out.n_requested = n;
  for (const Utterance& u : seeds.utterances()) {
    if (!u.is_seed()) continue;
    Rng rng(derive_seed(cfg_.seed, {seed, hash_string(u.id)}));
    std::vector<std::string> source;
    for (std::string_view tok : text::split_whitespace(u.text)) {
      source.emplace_back(tok);
    }
    std::vector<const std::string*> others;
    for (const std::string& intent : intents) {
      if (intent != u.intent) others.push_back(&intent);
    }

    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::string> tokens;
      for (std::size_t i = 0; i < source.size(); ++i) {
        std::string tok = source[i];
        auto it = cfg_.thesaurus.find(text::to_lower(tok));
        if (it != cfg_.thesaurus.end() && rng.bernoulli(cfg_.substitution_prob)) {
          tok = it->second[rng.uniform_index(it->second.size())];
        }
        if (i > 0 && rng.bernoulli(cfg_.drop_prob)) continue;
        tokens.push_back(std::move(tok));
      }
      if (!others.empty() && rng.bernoulli(cfg_.noise_rate)) {
        const auto& pool = pools.at(*others[rng.uniform_index(others.size())]);
        const auto len = static_cast<std::size_t>(rng.uniform_int(3, 7));
        tokens.clear();
        for (std::size_t i = 0; i < len; ++i) {
          tokens.push_back(pool[rng.uniform_index(pool.size())]);
        }
      }
      out.candidates.push_back({join(tokens), u.id, u.intent, name()});
    }
  }
  return out;
}

ParaphraseSet generate(const ParaphraserBackend& backend, const Corpus& corpus,
                       std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("generate: n must be >= 1");
  if (corpus.empty()) throw InvalidArgument("generate: empty corpus");
  return backend.generate(corpus, n, seed);
}

std::vector<bool> dedup_mask(const Corpus& corpus,
                             std::span<const ParaphraseCandidate> candidates) {
  std::unordered_set<std::string> seed_texts;
  for (const Utterance& u : corpus.utterances()) {
    seed_texts.insert(text::normalize(u.text));
  }
  std::vector<std::string> norms;
  norms.reserve(candidates.size());
  std::unordered_map<std::string, std::set<std::string>> intents_by_text;
  for (const ParaphraseCandidate& c : candidates) {
    norms.push_back(text::normalize(c.text));
    intents_by_text[norms.back()].insert(c.seed_intent);
  }
  std::vector<bool> keep(candidates.size(), false);
  std::unordered_set<std::string> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::string& norm = norms[i];
    if (norm.empty() || seed_texts.count(norm)) continue;
    if (intents_by_text[norm].size() > 1) continue;
    keep[i] = kept.insert(norm).second;
  }
  return keep;
}

ParaphraseSet dedup(const Corpus& corpus, const ParaphraseSet& ps) {
  const std::vector<bool> keep = dedup_mask(corpus, ps.candidates);
  ParaphraseSet out;
  out.n_requested = ps.n_requested;
  for (std::size_t i = 0; i < ps.candidates.size(); ++i) {
    if (keep[i]) out.candidates.push_back(ps.candidates[i]);
  }
  return out;
}

}  // namespace augmitl
