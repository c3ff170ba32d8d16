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

#include "bargmann/invariants.h"

#include <algorithm>

#include "bargmann/error.h"

namespace bargmann {

BargmannScenario::BargmannScenario(std::string name, std::vector<Word> words)
    : name_(std::move(name)), words_(std::move(words)) {
    std::sort(words_.begin(), words_.end());
    if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
        throw ArgumentError("scenario '" + name_ + "' contains duplicate words");
    }
}

BargmannScenario scenario_catalog(std::string_view name) {
    if (name == "winc2") {
        return BargmannScenario("winc2", {{1, 1, 2, 2}, {1, 2, 1, 2}});
    }
    if (name == "c3") {
        return BargmannScenario("c3", {{1, 2}, {1, 3}, {2, 3}});
    }
    if (name == "w3") {
        return BargmannScenario("w3", {{1, 2, 3}});
    }
    if (name == "w23") {
        return BargmannScenario("w23", {{1, 1}, {1, 1, 1}, {2, 2}, {2, 2, 2}, {1, 2}, {1, 1, 2}, {1, 2, 2}});
    }
    throw ArgumentError("unknown scenario '" + std::string(name) + "'");
}

std::vector<std::string> scenario_names() {
    return {"winc2", "c3", "w3", "w23"};
}

Complex bargmann_invariant(std::span<const PositiveOperator> states, const Word &word) {
    std::vector<const ComplexMatrix *> chain;
    chain.reserve(word.size());
    for (size_t letter : word.letters()) {
        if (letter > states.size()) {
            throw ArgumentError(
                "word " + word.str() + " refers to state " + std::to_string(letter) + " but only " +
                std::to_string(states.size()) + " states are available");
        }
        chain.push_back(&states[letter - 1].matrix());
    }
    return chain_product_trace(chain);
}

std::map<Word, Complex> evaluate_scenario(std::span<const PositiveOperator> states, const BargmannScenario &scenario) {
    std::map<Word, Complex> values;
    for (const auto &word : scenario.words()) {
        values.emplace(word, bargmann_invariant(states, word));
    }
    return values;
}

double classical_invariant(const ClassicalRealization &cr, const Word &word) {
    size_t basis = cr.basis_size();
    for (const auto &w : cr.weights) {
        if (w.size() != basis) {
            throw ShapeError("classical_invariant: weight sequences differ in length");
        }
    }
    if (word.max_letter() > cr.weights.size()) {
        throw ArgumentError(
            "word " + word.str() + " refers to letter " + std::to_string(word.max_letter()) + " but only " +
            std::to_string(cr.weights.size()) + " weight sequences are available");
    }
    double total = 0;
    for (size_t lambda = 0; lambda < basis; lambda++) {
        double term = 1;
        for (size_t letter : word.letters()) {
            term *= cr.weights[letter - 1][lambda];
        }
        total += term;
    }
    return total;
}

ClassicalRealization diagonal_weights(std::span<const PositiveOperator> states, const ComplexMatrix &basis) {
    ClassicalRealization cr;
    size_t d = basis.dim();
    for (const auto &rho : states) {
        if (rho.dim() != d) {
            throw ShapeError("diagonal_weights: state and basis dimensions differ");
        }
        std::vector<double> p(d);
        for (size_t lambda = 0; lambda < d; lambda++) {
            Complex total = 0;
            for (size_t r = 0; r < d; r++) {
                for (size_t c = 0; c < d; c++) {
                    total += std::conj(basis(r, lambda)) * rho.matrix()(r, c) * basis(c, lambda);
                }
            }
            p[lambda] = total.real();
        }
        cr.weights.push_back(std::move(p));
    }
    return cr;
}

}  // namespace bargmann
