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

#include "bargmann/state_io.h"

#include <set>

#include "bargmann/error.h"

namespace bargmann {

namespace {

double number_at(const nlohmann::json &value, const std::string &where) {
    if (!value.is_number()) {
        throw ParseError(where + ": expected a number");
    }
    return value.get<double>();
}

ComplexMatrix parse_matrix(const nlohmann::json &rows, size_t dim, const std::string &where) {
    if (!rows.is_array() || rows.size() != dim) {
        throw ParseError(where + ": expected an array of " + std::to_string(dim) + " rows");
    }
    std::vector<Complex> entries;
    entries.reserve(dim * dim);
    for (size_t r = 0; r < dim; r++) {
        const auto &row = rows[r];
        if (!row.is_array() || row.size() != dim) {
            throw ParseError(where + ": row " + std::to_string(r) + " must hold " + std::to_string(dim) + " entries");
        }
        for (size_t c = 0; c < dim; c++) {
            const auto &pair = row[c];
            std::string at = where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            if (!pair.is_array() || pair.size() != 2) {
                throw ParseError(at + ": expected a [re, im] pair");
            }
            entries.emplace_back(number_at(pair[0], at), number_at(pair[1], at));
        }
    }
    return ComplexMatrix(dim, std::move(entries));
}

}  // namespace

StateSet state_set_from_json(const nlohmann::json &doc, const StateTolerances &tol) {
    if (!doc.is_object()) {
        throw ParseError("state set: top level must be an object");
    }
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer() || doc["dimension"].get<long long>() < 1) {
        throw ParseError("state set: \"dimension\" must be a positive integer");
    }
    if (!doc.contains("states") || !doc["states"].is_array()) {
        throw ParseError("state set: \"states\" must be an array");
    }
    size_t dim = doc["dimension"].get<size_t>();
    StateSet set{dim, {}, {}};
    std::set<std::string> seen;
    size_t index = 0;
    for (const auto &entry : doc["states"]) {
        index++;
        std::string where = "state " + std::to_string(index);
        if (!entry.is_object() || !entry.contains("label") || !entry["label"].is_string()) {
            throw ParseError(where + ": expected an object with a string \"label\"");
        }
        std::string label = entry["label"].get<std::string>();
        if (!seen.insert(label).second) {
            throw ParseError(where + ": duplicate label '" + label + "'");
        }
        if (!entry.contains("matrix")) {
            throw ParseError(where + " ('" + label + "'): missing \"matrix\"");
        }
        ComplexMatrix m = parse_matrix(entry["matrix"], dim, where + " ('" + label + "')");
        try {
            set.states.push_back(validate_state(m, tol));
        } catch (const ValidationError &e) {
            throw ValidationError(where + " ('" + label + "'): " + e.what());
        }
        set.labels.push_back(std::move(label));
    }
    return set;
}

StateSet parse_state_set(std::string_view json_text, const StateTolerances &tol) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("state set: invalid JSON: ") + e.what());
    }
    return state_set_from_json(doc, tol);
}

nlohmann::json to_json(const StateSet &set) {
    nlohmann::json states = nlohmann::json::array();
    for (size_t k = 0; k < set.states.size(); k++) {
        const ComplexMatrix &m = set.states[k].matrix();
        nlohmann::json rows = nlohmann::json::array();
        for (size_t r = 0; r < m.dim(); r++) {
            nlohmann::json row = nlohmann::json::array();
            for (size_t c = 0; c < m.dim(); c++) {
                row.push_back({m(r, c).real(), m(r, c).imag()});
            }
            rows.push_back(std::move(row));
        }
        states.push_back({{"label", set.labels[k]}, {"matrix", std::move(rows)}});
    }
    return {{"dimension", set.dimension}, {"states", std::move(states)}};
}

std::string write_state_set(const StateSet &set) {
    return to_json(set).dump(2) + "\n";
}

StateSet make_state_set(std::vector<PositiveOperator> states, std::vector<std::string> labels) {
    size_t dim = common_dimension(states);
    if (labels.empty()) {
        for (size_t k = 0; k < states.size(); k++) {
            labels.push_back("rho" + std::to_string(k + 1));
        }
    }
    if (labels.size() != states.size()) {
        throw ArgumentError("make_state_set: label count does not match state count");
    }
    return StateSet{dim, std::move(labels), std::move(states)};
}

}  // namespace bargmann
