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

#include "augmitl/eval.hpp"

namespace augmitl::cli {

// 800x500 line chart of mean weighted F1 against training fraction, one
// series per variant, with a legend. No timestamps, so output is a pure
// function of the report.
std::string sweep_svg(const SweepReport& r);

}  // namespace augmitl::cli
