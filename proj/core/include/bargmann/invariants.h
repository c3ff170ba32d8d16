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

#ifndef BARGMANN_INVARIANTS_H
#define BARGMANN_INVARIANTS_H

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bargmann/state.h"
#include "bargmann/word.h"

namespace bargmann {

/// A named finite set of distinct words, kept in lexicographic order.
class BargmannScenario {
   public:
    /// Throws ArgumentError on duplicate words.
    BargmannScenario(std::string name, std::vector<Word> words);

    const std::string &name() const {
        return name_;
    }
    const std::vector<Word> &words() const {
        return words_;
    }

   private:
    std::string name_;
    std::vector<Word> words_;
};

/// Known scenarios:
///   winc2 = {(1,1,2,2), (1,2,1,2)}
///   c3    = {(1,2), (1,3), (2,3)}
///   w3    = {(1,2,3)}
///   w23   = every 2- and 3-letter word over {1,2} up to cyclic rotation:
///           (1,1), (1,1,1), (2,2), (2,2,2), (1,2), (1,1,2), (1,2,2)
/// Throws ArgumentError for other names.
BargmannScenario scenario_catalog(std::string_view name);
std::vector<std::string> scenario_names();

/// tr(rho_l1 rho_l2 ... rho_lm).
///
/// Throws ArgumentError if a letter exceeds the number of states and ShapeError if the
/// states referenced have different dimensions.
Complex bargmann_invariant(std::span<const PositiveOperator> states, const Word &word);

std::map<Word, Complex> evaluate_scenario(std::span<const PositiveOperator> states, const BargmannScenario &scenario);

/// Diagonal weights p^(l)_lambda of jointly diagonal states: weights[l-1][lambda].
struct ClassicalRealization {
    std::vector<std::vector<double>> weights;

    size_t basis_size() const {
        return weights.empty() ? 0 : weights.front().size();
    }
};

/// sum_lambda p^(l1)_lambda ... p^(lm)_lambda.
///
/// Throws ArgumentError for an out-of-range letter and ShapeError if the weight
/// sequences differ in length.
double classical_invariant(const ClassicalRealization &cr, const Word &word);

/// p^(l)_lambda = <lambda| rho_l |lambda> for the columns |lambda> of `basis`.
///
/// When the states commute and `basis` is a common eigenbasis, classical_invariant of
/// the result reproduces every bargmann_invariant.
ClassicalRealization diagonal_weights(std::span<const PositiveOperator> states, const ComplexMatrix &basis);

}  // namespace bargmann

#endif
