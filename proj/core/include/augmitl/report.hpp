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

#include <string>
#include <string_view>

#include "augmitl/augment.hpp"
#include "augmitl/corpus.hpp"
#include "augmitl/entity.hpp"
#include "augmitl/eval.hpp"
#include "augmitl/metrics.hpp"

// Deterministic JSON and CSV renderings of reports. JSON keys are sorted and
// numbers use shortest round-trip formatting, so identical inputs give
// byte-identical output. `config_json` must be a JSON document; it is
// embedded under "config".
namespace augmitl::report {

std::string format_double(double x);

std::string stats_json(const CorpusStats& s, std::string_view config_json);
std::string eval_json(const EvalReport& r, std::string_view config_json);
std::string augmentation_json(const AugmentationOutcome& o,
                              std::string_view config_json);
std::string dictionary_json(const SynonymDictionary& d,
                            std::string_view config_json);

std::string cv_json(const CVReport& r, std::string_view config_json);
// One row per (run, fold).
std::string cv_csv(const CVReport& r);

std::string sweep_json(const SweepReport& r, std::string_view config_json);
// One row per (variant, fraction, run).
std::string sweep_csv(const SweepReport& r);

}  // namespace augmitl::report
