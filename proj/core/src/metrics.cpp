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

#include "augmitl/metrics.hpp"

#include "augmitl/error.hpp"

namespace augmitl {

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

EvalReport report_from_counts(const std::map<std::string, MatchCounts>& counts,
                              std::size_t n_test) {
  EvalReport report;
  report.n_test = n_test;
  double weighted = 0.0;
  std::size_t total_support = 0;
  for (const auto& [label, m] : counts) {
    ClassScores s;
    s.support = m.true_positive + m.false_negative;
    s.precision = ratio(m.true_positive, m.true_positive + m.false_positive);
    s.recall = ratio(m.true_positive, s.support);
    s.f1 = (s.precision + s.recall) > 0.0
               ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
               : 0.0;
    weighted += static_cast<double>(s.support) * s.f1;
    total_support += s.support;
    report.per_class.emplace(label, s);
  }
  report.weighted_f1 =
      total_support == 0 ? 0.0 : weighted / static_cast<double>(total_support);
  return report;
}

EvalReport score_labels(std::span<const std::string> gold,
                        std::span<const std::string> predicted) {
  if (gold.size() != predicted.size()) {
    throw InvalidArgument("score_labels: gold and predicted differ in length");
  }
  std::map<std::string, MatchCounts> counts;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == predicted[i]) {
      ++counts[gold[i]].true_positive;
    } else {
      ++counts[gold[i]].false_negative;
      ++counts[predicted[i]].false_positive;
    }
  }
  return report_from_counts(counts, gold.size());
}

}  // namespace augmitl
