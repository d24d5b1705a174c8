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

#include "augmitl/eval.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "augmitl/error.hpp"
#include "augmitl/parallel.hpp"
#include "augmitl/random.hpp"

namespace augmitl {

namespace {

// Sub-stream tags for sweep seeds.
constexpr std::uint64_t kSplitStream = 0x5350;
constexpr std::uint64_t kSubsampleStream = 0x5355;
constexpr std::uint64_t kGenerateStream = 0x4745;

std::vector<std::string> sorted_ids(const Corpus& c) {
  std::vector<std::string> ids;
  for (const Utterance& u : c.utterances()) ids.push_back(u.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::uint64_t fingerprint(const std::vector<std::string>& sorted) {
  std::string joined;
  for (const std::string& id : sorted) {
    joined += id;
    joined.push_back('\n');
  }
  return hash_string(joined);
}

struct TrainedPartition {
  Corpus corpus;
  std::size_t n_candidates = 0;
  std::map<RejectReason, std::size_t> rejected;
};

// Builds the training corpus for one partition. Paraphrases are generated
// from `train_seeds` only, and the MITL filter model sees only those seeds.
TrainedPartition build_training(const Corpus& train_seeds,
                                const std::optional<AugmentationPlan>& plan,
                                const ClassifierBackend& backend,
                                std::uint64_t gen_seed) {
  TrainedPartition out;
  if (!plan) {
    out.corpus = train_seeds;
    return out;
  }
  if (plan->paraphraser == nullptr) {
    throw ConfigError("augmentation plan without a paraphraser");
  }
  ParaphraseSet ps = generate(*plan->paraphraser, train_seeds, plan->n, gen_seed);
  std::unique_ptr<IntentClassifier> filter_model;
  if (is_mitl(plan->strategy.kind)) filter_model = backend.train(train_seeds);
  AugmentationOutcome outcome =
      augment(train_seeds, ps, plan->strategy, filter_model.get());
  out.n_candidates = ps.candidates.size();
  out.rejected = std::move(outcome.rejected);
  out.corpus = std::move(outcome.corpus);
  return out;
}

void check_plan(const std::optional<AugmentationPlan>& plan) {
  if (!plan) return;
  if (plan->paraphraser == nullptr) {
    throw ConfigError("augmentation plan without a paraphraser");
  }
  if (plan->n < 1) throw InvalidArgument("augmentation factor must be >= 1");
  plan->strategy.validate();
}

}  // namespace

std::string variant_name(const AugmentationPlan& plan) {
  std::string suffix = "aug" + std::to_string(plan.n);
  if (plan.strategy.kind == Strategy::kBaseline) return suffix;
  return std::string(strategy_name(plan.strategy.kind)) + "_" + suffix;
}

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double population_std(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size()));
}

CVReport cross_validate(const Corpus& corpus,
                        const std::optional<AugmentationPlan>& augmentation,
                        const ClassifierBackend& backend,
                        const CVOptions& opts) {
  if (opts.k < 2) throw InvalidArgument("cross_validate: k must be >= 2");
  if (opts.runs < 1) throw InvalidArgument("cross_validate: runs must be >= 1");
  check_plan(augmentation);
  const Corpus seeds = corpus.seeds();
  if (seeds.empty()) throw InvalidArgument("cross_validate: no seed utterances");

  std::vector<FoldPlan> plans;
  for (std::size_t r = 0; r < opts.runs; ++r) {
    plans.push_back(make_folds(seeds, opts.k, derive_seed(opts.master_seed, {r})));
  }

  CVReport report;
  report.k = opts.k;
  report.runs = opts.runs;
  report.master_seed = opts.master_seed;
  report.folds.assign(opts.runs, std::vector<FoldRecord>(opts.k));

  parallel_for(opts.runs * opts.k, opts.jobs, [&](std::size_t task) {
    const std::size_t r = task / opts.k;
    const std::size_t f = task % opts.k;
    const std::set<std::string>& test_set = plans[r].folds[f];

    std::set<std::string> train_set;
    for (const Utterance& u : seeds.utterances()) {
      if (!test_set.count(u.id)) train_set.insert(u.id);
    }
    const Corpus test = seeds.filter_ids(test_set);
    const Corpus train_seeds = seeds.filter_ids(train_set);

    TrainedPartition part = build_training(
        train_seeds, augmentation, backend,
        derive_seed(opts.master_seed, {r, f}));
    std::unique_ptr<IntentClassifier> model = backend.train(part.corpus);

    FoldRecord& rec = report.folds[r][f];
    rec.run = r;
    rec.fold = f;
    rec.report = evaluate(*model, test);
    rec.test_ids = sorted_ids(test);
    rec.train_seed_ids = sorted_ids(train_seeds);
    std::set<std::string> parents;
    for (const Utterance& u : part.corpus.utterances()) {
      if (!u.is_seed()) {
        parents.insert(*u.origin.paraphrase_of);
        ++rec.n_paraphrases;
      }
    }
    for (const Utterance& u : test.utterances()) {
      if (!u.is_seed()) ++rec.n_test_paraphrases;
    }
    rec.paraphrase_parents.assign(parents.begin(), parents.end());
    rec.n_train = part.corpus.size();
    rec.n_candidates = part.n_candidates;
    rec.rejected = std::move(part.rejected);
    const std::set<std::string> train_intents = train_seeds.intents();
    for (const std::string& intent : test.intents()) {
      if (!train_intents.count(intent)) {
        rec.warnings.push_back("intent " + intent +
                               " has no training samples in this fold");
      }
    }
  });

  for (const auto& run : report.folds) {
    std::vector<double> f1s;
    for (const FoldRecord& rec : run) f1s.push_back(rec.report.weighted_f1);
    report.run_means.push_back(mean(f1s));
  }
  report.grand_mean = mean(report.run_means);
  report.std = population_std(report.run_means);
  return report;
}

SweepReport sweep(const Corpus& corpus, const std::vector<SweepVariant>& variants,
                  const ClassifierBackend& backend, const SweepOptions& opts) {
  if (opts.runs < 1) throw InvalidArgument("sweep: runs must be >= 1");
  if (opts.fractions.empty()) throw InvalidArgument("sweep: no fractions");
  for (std::size_t i = 0; i < opts.fractions.size(); ++i) {
    const double f = opts.fractions[i];
    if (!(f > 0.0 && f <= 1.0)) {
      throw InvalidArgument("sweep: fractions must lie in (0, 1]");
    }
    if (i > 0 && !(f > opts.fractions[i - 1])) {
      throw InvalidArgument("sweep: fractions must be strictly increasing");
    }
  }
  std::vector<SweepVariant> all;
  all.push_back({"original", std::nullopt});
  std::set<std::string> names = {"original"};
  for (const SweepVariant& v : variants) {
    if (!v.plan) throw InvalidArgument("sweep: variant " + v.name + " has no plan");
    check_plan(v.plan);
    if (!names.insert(v.name).second) {
      throw InvalidArgument("sweep: duplicate variant name " + v.name);
    }
    all.push_back(v);
  }
  const Corpus seeds = corpus.seeds();
  if (seeds.empty()) throw InvalidArgument("sweep: no seed utterances");

  std::vector<TrainTestSplit> splits;
  SweepReport report;
  report.fractions = opts.fractions;
  report.runs = opts.runs;
  report.master_seed = opts.master_seed;
  for (const SweepVariant& v : all) report.variants.push_back(v.name);
  for (std::size_t r = 0; r < opts.runs; ++r) {
    splits.push_back(split_train_test(
        seeds, opts.test_fraction,
        derive_seed(opts.master_seed, {r, kSplitStream})));
    report.test_ids.push_back(sorted_ids(splits.back().test));
  }

  const std::size_t n_frac = opts.fractions.size();
  const std::size_t n_var = all.size();
  report.points.resize(opts.runs * n_frac * n_var);
  parallel_for(report.points.size(), opts.jobs, [&](std::size_t task) {
    const std::size_t r = task / (n_frac * n_var);
    const std::size_t fi = (task / n_var) % n_frac;
    const std::size_t vi = task % n_var;
    const TrainTestSplit& split = splits[r];
    // Same subsample seed for every fraction keeps subsets nested; same
    // generation seed keeps each utterance's paraphrases stable across
    // fractions.
    const Corpus train_seeds = subsample_training(
        split.train, opts.fractions[fi],
        derive_seed(opts.master_seed, {r, kSubsampleStream}));
    TrainedPartition part =
        build_training(train_seeds, all[vi].plan, backend,
                       derive_seed(opts.master_seed, {r, kGenerateStream}));
    std::unique_ptr<IntentClassifier> model = backend.train(part.corpus);

    SweepPoint& p = report.points[task];
    p.variant = all[vi].name;
    p.fraction_index = fi;
    p.fraction = opts.fractions[fi];
    p.run = r;
    p.report = evaluate(*model, split.test);
    p.n_train_seeds = train_seeds.size();
    p.n_train = part.corpus.size();
    p.n_test = split.test.size();
    p.test_fingerprint = fingerprint(sorted_ids(split.test));
  });

  for (std::size_t vi = 0; vi < n_var; ++vi) {
    std::vector<CurvePoint>& curve = report.curves[all[vi].name];
    for (std::size_t fi = 0; fi < n_frac; ++fi) {
      std::vector<double> f1s;
      for (std::size_t r = 0; r < opts.runs; ++r) {
        f1s.push_back(
            report.points[(r * n_frac + fi) * n_var + vi].report.weighted_f1);
      }
      curve.push_back({opts.fractions[fi], mean(f1s), population_std(f1s)});
    }
  }
  return report;
}

double reduction_factor(const SweepReport& report,
                        const std::string& baseline_variant,
                        const std::string& aug_variant, double target_f1) {
  auto first_reaching = [&](const std::string& variant) {
    auto it = report.curves.find(variant);
    if (it == report.curves.end()) {
      throw InvalidArgument("reduction_factor: unknown variant " + variant);
    }
    for (const CurvePoint& p : it->second) {
      if (p.mean_f1 >= target_f1) return p.fraction;
    }
    throw InvalidArgument("reduction_factor: variant " + variant +
                          " never reaches F1 " + std::to_string(target_f1));
  };
  const double base = first_reaching(baseline_variant);
  const double aug = first_reaching(aug_variant);
  return base / aug;
}

}  // namespace augmitl
