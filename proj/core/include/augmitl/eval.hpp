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
#include <optional>
#include <string>
#include <vector>

#include "augmitl/augment.hpp"
#include "augmitl/classifier.hpp"
#include "augmitl/corpus.hpp"
#include "augmitl/metrics.hpp"
#include "augmitl/paraphrase.hpp"

namespace augmitl {

// How training partitions are augmented: generate n paraphrases per training
// seed, then apply the strategy.
struct AugmentationPlan {
  const ParaphraserBackend* paraphraser = nullptr;
  std::size_t n = 0;
  StrategyConfig strategy;
};

// "aug5" for baseline, "success_conf_aug5" otherwise.
std::string variant_name(const AugmentationPlan& plan);

struct FoldRecord {
  std::size_t run = 0;
  std::size_t fold = 0;
  EvalReport report;
  std::vector<std::string> test_ids;         // sorted
  std::vector<std::string> train_seed_ids;   // sorted
  std::vector<std::string> paraphrase_parents;  // sorted, unique
  std::size_t n_test_paraphrases = 0;  // counted on the evaluated test set
  std::size_t n_train = 0;
  std::size_t n_paraphrases = 0;
  std::size_t n_candidates = 0;
  std::map<RejectReason, std::size_t> rejected;
  std::vector<std::string> warnings;
};

struct CVReport {
  std::size_t k = 0;
  std::size_t runs = 0;
  std::uint64_t master_seed = 0;
  std::vector<std::vector<FoldRecord>> folds;  // [run][fold]
  std::vector<double> run_means;
  double grand_mean = 0.0;
  double std = 0.0;  // population std of run_means
};

struct CVOptions {
  std::size_t k = 10;
  std::size_t runs = 3;
  std::uint64_t master_seed = 0;
  std::size_t jobs = 1;
};

// k-fold cross-validation where only training partitions are augmented.
// Paraphrases and the MITL filter model come from each fold's training seeds
// alone; test folds hold original seeds only. Run r uses fold plan seed
// derive_seed(master, {r}) and fold f generates with derive_seed(master,
// {r, f}). Output is identical for every `jobs` value.
CVReport cross_validate(const Corpus& seeds,
                        const std::optional<AugmentationPlan>& augmentation,
                        const ClassifierBackend& backend,
                        const CVOptions& opts);

struct SweepVariant {
  std::string name;
  std::optional<AugmentationPlan> plan;  // nullopt: original data only
};

struct SweepPoint {
  std::string variant;
  std::size_t fraction_index = 0;
  double fraction = 0.0;
  std::size_t run = 0;
  EvalReport report;
  std::size_t n_train_seeds = 0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  std::uint64_t test_fingerprint = 0;  // hash of the sorted test ids
};

struct CurvePoint {
  double fraction = 0.0;
  double mean_f1 = 0.0;
  double std_f1 = 0.0;
};

struct SweepReport {
  std::vector<double> fractions;
  std::vector<std::string> variants;  // "original" first
  std::map<std::string, std::vector<CurvePoint>> curves;
  std::vector<SweepPoint> points;  // ordered by (run, fraction, variant)
  std::vector<std::vector<std::string>> test_ids;  // per run, sorted
  std::size_t runs = 0;
  std::uint64_t master_seed = 0;
};

struct SweepOptions {
  std::vector<double> fractions = {0.1, 0.2, 0.3, 0.4, 0.5,
                                   0.6, 0.7, 0.8, 0.9, 1.0};
  std::size_t runs = 3;
  std::uint64_t master_seed = 0;
  double test_fraction = 0.2;
  std::size_t jobs = 1;
};

// Data-size sweep: per run one stratified train/test split; every fraction of
// the training seeds is trained with each variant and scored on that run's
// test set. An "original" variant is always evaluated first.
SweepReport sweep(const Corpus& seeds, const std::vector<SweepVariant>& variants,
                  const ClassifierBackend& backend, const SweepOptions& opts);

// f_base / f_aug, where f_v is the smallest fraction whose mean F1 reaches
// target_f1 on variant v's curve.
double reduction_factor(const SweepReport& report,
                        const std::string& baseline_variant,
                        const std::string& aug_variant, double target_f1);

double mean(const std::vector<double>& xs);
double population_std(const std::vector<double>& xs);

}  // namespace augmitl
