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
#include <set>
#include <string>
#include <vector>

#include "augmitl/corpus.hpp"
#include "augmitl/entity.hpp"
#include "augmitl/eval.hpp"
#include "augmitl/paraphrase.hpp"

// Synthetic corpora shared by the unit tests, the acceptance runner and the
// benchmarks.
namespace augmitl::fixtures {

Utterance seed(std::string id, std::string text, std::string intent);

// {("yes", affirm), ("no thanks", deny), ("ok", affirm)}
Corpus tiny();

// Each intent owns a disjoint keyword set "k<intent>w<j>"; utterances are
// 2-4 keywords of their own intent.
struct SeparableSpec {
  std::size_t n_intents = 4;
  std::size_t per_intent = 20;
  std::size_t keywords_per_intent = 4;
  std::uint64_t seed = 1;
};
Corpus separable(const SeparableSpec& spec);

// Thesaurus mapping every keyword of the separable fixture to the other
// keywords of the same intent.
std::map<std::string, std::vector<std::string>> separable_thesaurus(
    const SeparableSpec& spec);

// 14 intents / 1927 samples with min 22, max 555: six intents below 50
// samples and five one-to-three word intents.
Corpus planting_shape();
extern const std::vector<std::string> kPlantingLowIntents;
extern const std::vector<std::string> kPlantingShortIntents;

// Confusable corpus for augmentation experiments. Every intent has concept
// slots with a canonical word and rarer synonyms, shares filler words with
// all intents and overlap words with a neighbour. Paraphrasing with
// noisy_thesaurus() introduces the rarer synonyms. Texts are unique.
struct NoisySpec {
  std::size_t n_intents = 8;
  std::size_t per_intent = 25;
  std::uint64_t seed = 7;
};
Corpus noisy(const NoisySpec& spec);
std::map<std::string, std::vector<std::string>> noisy_thesaurus(
    const NoisySpec& spec);

// Sweep report with variants "original" and "aug10" holding the given mean
// curves.
SweepReport step_curves(const std::vector<double>& fractions,
                        const std::vector<double>& original,
                        const std::vector<double>& aug);
// {step, 2 step, ..., n step}
std::vector<double> grid(double step, std::size_t n);

// Random annotation problem: a dictionary over a small word list with
// distinct scores (no ambiguity), a noun lexicon and 1-20 utterances of 1-6
// words, some with doubled spaces and punctuation.
struct EntityCase {
  SynonymDictionary dict;
  std::set<std::string> nouns;
  Corpus corpus;
};
EntityCase random_entity_case(std::uint64_t seed);

// Random label vectors for metric checks.
std::vector<std::string> random_labels(std::size_t n, std::size_t n_labels,
                                       std::uint64_t seed);

}  // namespace augmitl::fixtures
