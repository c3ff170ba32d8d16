// Copyright 2026 The Bargmann Authors
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

#ifndef BARGMANN_REPORT_JSON_H
#define BARGMANN_REPORT_JSON_H

#include <nlohmann/json.hpp>

#include "bargmann/criteria.h"
#include "bargmann/estimator.h"
#include "bargmann/fixtures.h"

namespace bargmann {

// Machine-readable report forms. Key names are stable.

nlohmann::json to_json(const PairGap &pair);
/// {"n", "pairs", "verdict", "mode", "reference"?, "invariant_count"}
nlohmann::json to_json(const CoherenceReport &report);
nlohmann::json to_json(const FacetReport &report);
nlohmann::json to_json(const GramRankResult &result);
nlohmann::json to_json(const ImaginarityWitness &witness);
nlohmann::json to_json(const QubitCriterionResult &result);
/// {"word", "re", "im", "stderr_re", "stderr_im", "shots"}
nlohmann::json to_json(const EstimateResult &result);
nlohmann::json to_json(const GapEstimate &estimate);
/// Array of {"fixture", "quantity", "expected", "computed", "abs_error", "pass"}.
nlohmann::json to_json(const PaperCheckReport &report);

}  // namespace bargmann

#endif
