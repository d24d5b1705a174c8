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

#include "augmitl/report.hpp"

#include <charconv>
#include <sstream>

#include "augmitl/error.hpp"
#include "json.hpp"

namespace augmitl::report {

namespace {

using json = nlohmann::json;

json eval_to_json(const EvalReport& r) {
  json per_class = json::object();
  for (const auto& [label, s] : r.per_class) {
    per_class[label] = {{"precision", s.precision},
                        {"recall", s.recall},
                        {"f1", s.f1},
                        {"support", s.support}};
  }
  return {{"per_class", per_class},
          {"weighted_f1", r.weighted_f1},
          {"n_test", r.n_test}};
}

json rejected_to_json(const std::map<RejectReason, std::size_t>& rejected) {
  json out = json::object();
  for (RejectReason reason :
       {RejectReason::kDuplicate, RejectReason::kWrongLabel,
        RejectReason::kLowConfidence, RejectReason::kExcludedIntent}) {
    auto it = rejected.find(reason);
    out[std::string(reject_reason_name(reason))] =
        it == rejected.end() ? 0 : it->second;
  }
  return out;
}

std::string finish(json doc, std::string_view config_json) {
  try {
    doc["config"] = json::parse(config_json.empty() ? "{}" : config_json);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return doc.dump(2) + "\n";
}

std::size_t rejected_count(const std::map<RejectReason, std::size_t>& m,
                           RejectReason r) {
  auto it = m.find(r);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string stats_json(const CorpusStats& s, std::string_view config_json) {
  json doc = {
      {"n_intents", s.n_intents},
      {"n_samples", s.n_samples},
      {"min_samples_per_intent", s.min_samples_per_intent},
      {"max_samples_per_intent", s.max_samples_per_intent},
      {"avg_samples_per_intent", s.avg_samples_per_intent},
      {"vocab_size", s.vocab_size},
      {"total_tokens", s.total_tokens},
      {"min_tokens_per_sample", s.min_tokens_per_sample},
      {"max_tokens_per_sample", s.max_tokens_per_sample},
      {"avg_tokens_per_sample", s.avg_tokens_per_sample},
      {"samples_per_intent", s.samples_per_intent},
  };
  return finish(std::move(doc), config_json);
}

std::string eval_json(const EvalReport& r, std::string_view config_json) {
  return finish(eval_to_json(r), config_json);
}

std::string augmentation_json(const AugmentationOutcome& o,
                              std::string_view config_json) {
  std::size_t n_seeds = 0;
  for (const Utterance& u : o.corpus.utterances()) n_seeds += u.is_seed();
  json doc = {{"accepted", o.accepted},
              {"accepted_total", o.accepted_total()},
              {"rejected", rejected_to_json(o.rejected)},
              {"rejected_total", o.rejected_total()},
              {"n_seeds", n_seeds},
              {"n_output", o.corpus.size()}};
  return finish(std::move(doc), config_json);
}

std::string dictionary_json(const SynonymDictionary& d,
                            std::string_view config_json) {
  return finish({{"entries", d.entries}}, config_json);
}

std::string cv_json(const CVReport& r, std::string_view config_json) {
  json runs = json::array();
  for (std::size_t ri = 0; ri < r.folds.size(); ++ri) {
    json folds = json::array();
    for (const FoldRecord& f : r.folds[ri]) {
      folds.push_back({{"fold", f.fold},
                       {"eval", eval_to_json(f.report)},
                       {"n_test", f.test_ids.size()},
                       {"n_train", f.n_train},
                       {"n_train_seeds", f.train_seed_ids.size()},
                       {"n_paraphrases", f.n_paraphrases},
                       {"n_candidates", f.n_candidates},
                       {"n_test_paraphrases", f.n_test_paraphrases},
                       {"rejected", rejected_to_json(f.rejected)},
                       {"warnings", f.warnings}});
    }
    runs.push_back({{"run", ri}, {"mean_weighted_f1", r.run_means[ri]}, {"folds", folds}});
  }
  json doc = {{"k", r.k},
              {"runs", r.runs},
              {"master_seed", r.master_seed},
              {"run_means", r.run_means},
              {"grand_mean", r.grand_mean},
              {"std", r.std},
              {"per_run", runs}};
  return finish(std::move(doc), config_json);
}

std::string cv_csv(const CVReport& r) {
  std::ostringstream out;
  out << "run,fold,n_test,n_train,n_paraphrases,n_candidates,"
         "rejected_duplicate,rejected_wrong_label,rejected_low_confidence,"
         "rejected_excluded_intent,weighted_f1\n";
  for (const auto& run : r.folds) {
    for (const FoldRecord& f : run) {
      out << f.run << ',' << f.fold << ',' << f.test_ids.size() << ','
          << f.n_train << ',' << f.n_paraphrases << ',' << f.n_candidates << ','
          << rejected_count(f.rejected, RejectReason::kDuplicate) << ','
          << rejected_count(f.rejected, RejectReason::kWrongLabel) << ','
          << rejected_count(f.rejected, RejectReason::kLowConfidence) << ','
          << rejected_count(f.rejected, RejectReason::kExcludedIntent) << ','
          << format_double(f.report.weighted_f1) << '\n';
    }
  }
  return out.str();
}

std::string sweep_json(const SweepReport& r, std::string_view config_json) {
  json curves = json::object();
  for (const auto& [variant, points] : r.curves) {
    json pts = json::array();
    for (const CurvePoint& p : points) {
      pts.push_back({{"fraction", p.fraction},
                     {"mean_f1", p.mean_f1},
                     {"std_f1", p.std_f1}});
    }
    curves[variant] = std::move(pts);
  }
  json doc = {{"fractions", r.fractions},
              {"variants", r.variants},
              {"runs", r.runs},
              {"master_seed", r.master_seed},
              {"curves", curves}};
  return finish(std::move(doc), config_json);
}

std::string sweep_csv(const SweepReport& r) {
  std::ostringstream out;
  out << "variant,fraction,run,n_train_seeds,n_train,n_test,test_fingerprint,"
         "weighted_f1\n";
  for (const std::string& variant : r.variants) {
    for (const SweepPoint& p : r.points) {
      if (p.variant != variant) continue;
      out << p.variant << ',' << format_double(p.fraction) << ',' << p.run
          << ',' << p.n_train_seeds << ',' << p.n_train << ',' << p.n_test
          << ',' << p.test_fingerprint << ','
          << format_double(p.report.weighted_f1) << '\n';
    }
  }
  return out.str();
}

}  // namespace augmitl::report
