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
#include <map>
#include <span>
#include <string>

namespace augmitl {

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // gold count
};

// Per-class precision/recall/F1 plus the support-weighted average F1.
// Classes that were predicted but have no gold support appear with
// support 0 and carry no weight.
struct EvalReport {
  std::map<std::string, ClassScores> per_class;
  double weighted_f1 = 0.0;
  std::size_t n_test = 0;
};

struct MatchCounts {
  std::size_t true_positive = 0;
  std::size_t false_positive = 0;
  std::size_t false_negative = 0;
};

// Builds a report from per-class match counts. Undefined ratios (0/0) are
// reported as 0. When no class has gold support the weighted F1 is 0.
EvalReport report_from_counts(const std::map<std::string, MatchCounts>& counts,
                              std::size_t n_test);

// Single-label classification scoring; `gold` and `predicted` align
// index-for-index.
EvalReport score_labels(std::span<const std::string> gold,
                        std::span<const std::string> predicted);

}  // namespace augmitl
