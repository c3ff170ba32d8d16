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

#ifndef BARGMANN_STATE_IO_H
#define BARGMANN_STATE_IO_H

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bargmann/state.h"

namespace bargmann {

/// A labelled collection of states of one dimension.
///
/// JSON form:
///   {"dimension": d,
///    "states": [{"label": "rho1", "matrix": [[[re, im], ...], ...]}, ...]}
struct StateSet {
    size_t dimension;
    std::vector<std::string> labels;
    std::vector<PositiveOperator> states;
};

/// Parses and validates a state-set document.
///
/// Throws ParseError for malformed JSON or schema violations (missing keys, wrong matrix
/// shape, duplicate labels) and ValidationError subclasses for matrices that are not states.
StateSet parse_state_set(std::string_view json_text, const StateTolerances &tol = {});
StateSet state_set_from_json(const nlohmann::json &doc, const StateTolerances &tol = {});

nlohmann::json to_json(const StateSet &set);

/// Serialized document text, newline terminated. Doubles use the shortest representation
/// that round-trips.
std::string write_state_set(const StateSet &set);

/// Labels default to "rho1", "rho2", ...
StateSet make_state_set(std::vector<PositiveOperator> states, std::vector<std::string> labels = {});

}  // namespace bargmann

#endif
