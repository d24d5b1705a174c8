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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "augmitl/augment.hpp"
#include "augmitl/classifier.hpp"
#include "augmitl/entity.hpp"
#include "augmitl/paraphrase.hpp"
#include "fixtures.hpp"

using namespace augmitl;

namespace {

Corpus noisy_corpus(benchmark::State& state) {
  return fixtures::noisy({8, static_cast<std::size_t>(state.range(0)), 7});
}

void BM_NaiveBayesTrain(benchmark::State& state) {
  const Corpus c = noisy_corpus(state);
  for (auto _ : state) benchmark::DoNotOptimize(train(TrainConfig{}, c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.size()));
}
BENCHMARK(BM_NaiveBayesTrain)->Arg(25)->Arg(100)->Arg(400);

void BM_NaiveBayesPredict(benchmark::State& state) {
  const Corpus c = noisy_corpus(state);
  const ReferenceModel m = train(TrainConfig{}, c);
  std::vector<std::string> texts;
  for (const Utterance& u : c.utterances()) texts.push_back(u.text);
  for (auto _ : state) benchmark::DoNotOptimize(m.classify(texts));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(texts.size()));
}
BENCHMARK(BM_NaiveBayesPredict)->Arg(25)->Arg(100)->Arg(400);

void BM_MockGenerate(benchmark::State& state) {
  const Corpus c = noisy_corpus(state);
  MockParaphraserConfig cfg;
  cfg.thesaurus = fixtures::noisy_thesaurus({});
  cfg.noise_rate = 0.3;
  cfg.drop_prob = 0.1;
  const MockParaphraser mock(cfg);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mock.generate(c, 10, ++seed));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.size()) * 10);
}
BENCHMARK(BM_MockGenerate)->Arg(25)->Arg(100);

void BM_AugmentSuccessConf(benchmark::State& state) {
  const Corpus c = noisy_corpus(state);
  MockParaphraserConfig cfg;
  cfg.thesaurus = fixtures::noisy_thesaurus({});
  cfg.noise_rate = 0.3;
  const ParaphraseSet ps = MockParaphraser(cfg).generate(c, 5, 1);
  const ReferenceModel m = train(TrainConfig{}, c);
  StrategyConfig sc;
  sc.kind = Strategy::kSuccessConf;
  for (auto _ : state) benchmark::DoNotOptimize(augment(c, ps, sc, &m));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ps.candidates.size()));
}
BENCHMARK(BM_AugmentSuccessConf)->Arg(25)->Arg(100);

void BM_Annotate(benchmark::State& state) {
  std::vector<Utterance> us;
  for (std::uint64_t s = 1; us.size() < static_cast<std::size_t>(state.range(0)); ++s) {
    const fixtures::EntityCase ec = fixtures::random_entity_case(s);
    for (const Utterance& u : ec.corpus.utterances()) {
      Utterance v = u;
      v.id = "u" + std::to_string(us.size());
      us.push_back(v);
    }
  }
  const Corpus c("c", us);
  const fixtures::EntityCase ec = fixtures::random_entity_case(1);
  const LexiconTagger tagger(ec.nouns);
  for (auto _ : state) benchmark::DoNotOptimize(annotate(c, ec.dict, tagger));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.size()));
}
BENCHMARK(BM_Annotate)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
