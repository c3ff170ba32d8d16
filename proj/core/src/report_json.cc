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

#include "bargmann/report_json.h"

#include <cmath>

namespace bargmann {

namespace {

nlohmann::json matrix_rows_real(const ComplexMatrix &m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t r = 0; r < m.dim(); r++) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t c = 0; c < m.dim(); c++) {
            row.push_back(m(r, c).real());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// JSON has no NaN or infinity; they serialize as null.
nlohmann::json finite_or_null(double x) {
    return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const PairGap &pair) {
    return {
        {"indices", {pair.first, pair.second}},
        {"delta_llkk", pair.delta_llkk},
        {"delta_lklk", pair.delta_lklk},
        {"gap", pair.gap},
        {"commutes", pair.commutes},
    };
}

nlohmann::json to_json(const CoherenceReport &report) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto &p : report.pairs) {
        pairs.push_back(to_json(p));
    }
    nlohmann::json out{
        {"n", report.n},
        {"pairs", std::move(pairs)},
        {"verdict", to_string(report.verdict)},
        {"mode", to_string(report.mode)},
        {"invariant_count", report.invariant_count},
    };
    if (report.reference) {
        out["reference"] = *report.reference;
    }
    return out;
}

nlohmann::json to_json(const FacetReport &report) {
    return {
        {"point", report.point},
        {"facet_slacks", report.facet_slacks},
        {"box_ok", report.box_ok},
        {"member", report.member},
    };
}

nlohmann::json to_json(const GramRankResult &result) {
    nlohmann::json out{
        {"gram", matrix_rows_real(result.gram)},
        {"eigenvalues", result.eigenvalues},
        {"rank", result.rank},
        {"dimension", result.dim},
        {"rank_bound", result.dim - 1},
        {"condition_holds", result.condition_holds},
        {"conclusive", result.conclusive},
    };
    out["verdict"] = result.verdict ? nlohmann::json(to_string(*result.verdict)) : nlohmann::json(nullptr);
    return out;
}

nlohmann::json to_json(const ImaginarityWitness &witness) {
    return {
        {"lhs", witness.lhs},
        {"rhs", witness.rhs},
        {"satisfied", witness.satisfied},
        {"im_delta", witness.im_delta},
    };
}

nlohmann::json to_json(const QubitCriterionResult &result) {
    return {{"residual", result.residual}, {"commutes", result.commutes}};
}

nlohmann::json to_json(const EstimateResult &result) {
    return {
        {"word", result.word.str()},
        {"re", result.estimate.real()},
        {"im", result.estimate.imag()},
        {"stderr_re", result.stderr_re},
        {"stderr_im", result.stderr_im},
        {"shots", result.shots_used},
    };
}

nlohmann::json to_json(const GapEstimate &estimate) {
    return {
        {"delta_1122", to_json(estimate.delta_1122)},
        {"delta_1212", to_json(estimate.delta_1212)},
        {"gap_estimate", estimate.gap_estimate},
        {"standard_error", estimate.standard_error},
    };
}

nlohmann::json to_json(const PaperCheckReport &report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : report.rows) {
        rows.push_back({
            {"fixture", row.fixture},
            {"quantity", row.quantity},
            {"expected", row.expected},
            {"computed", finite_or_null(row.computed)},
            {"abs_error", finite_or_null(row.abs_error)},
            {"pass", row.pass},
        });
    }
    return rows;
}

}  // namespace bargmann
