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

#include "bargmann/estimator.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "bargmann/error.h"
#include "bargmann/invariants.h"
#include "bargmann/random.h"

namespace bargmann {

namespace {

Rng setting_rng(uint64_t seed, const Word &word, uint32_t setting) {
    std::vector<uint32_t> material{
        static_cast<uint32_t>(seed & 0xFFFFFFFFu), static_cast<uint32_t>(seed >> 32), setting};
    for (size_t letter : word.letters()) {
        material.push_back(static_cast<uint32_t>(letter));
    }
    std::seed_seq seq(material.begin(), material.end());
    return Rng(seq);
}

// Returns (2 * successes / shots - 1, its standard error).
std::pair<double, double> sample_component(double expectation, uint64_t shots, Rng rng) {
    double p = std::clamp((1 + expectation) / 2, 0.0, 1.0);
    uint64_t successes = 0;
    if (p >= 1) {
        successes = shots;
    } else if (p > 0) {
        std::binomial_distribution<uint64_t> binomial(shots, p);
        successes = binomial(rng);
    }
    double n = static_cast<double>(shots);
    double x = 2 * static_cast<double>(successes) / n - 1;
    double floor = 1e-3 / std::sqrt(n);
    double se = std::max(std::sqrt(std::max(0.0, 1 - x * x)) / std::sqrt(n), floor);
    return {x, se};
}

void require_normalized(std::span<const PositiveOperator> states, const Word &word) {
    for (size_t letter : word.letters()) {
        if (letter <= states.size() && !states[letter - 1].normalized()) {
            throw PreconditionError(
                "estimate_invariant: state " + std::to_string(letter) +
                " is not normalized; cycle-test expectations would leave [-1, 1]");
        }
    }
}

}  // namespace

EstimateResult estimate_invariant(std::span<const PositiveOperator> states, const Word &word, const EstimatorConfig &config) {
    if (config.shots_per_setting == 0) {
        throw PreconditionError("estimate_invariant: shots must be at least 1");
    }
    require_normalized(states, word);
    Complex exact = bargmann_invariant(states, word);

    auto [re, se_re] = sample_component(exact.real(), config.shots_per_setting, setting_rng(config.seed, word, 0));
    EstimateResult result{word, Complex(re, 0), se_re, 0, config.shots_per_setting};
    if (config.settings == EstimatorSettings::real_and_imag) {
        auto [im, se_im] = sample_component(exact.imag(), config.shots_per_setting, setting_rng(config.seed, word, 1));
        result.estimate = Complex(re, im);
        result.stderr_im = se_im;
        result.shots_used += config.shots_per_setting;
    }
    return result;
}

GapEstimate estimate_gap(const PositiveOperator &rho1, const PositiveOperator &rho2, const EstimatorConfig &config) {
    std::vector<PositiveOperator> pair{rho1, rho2};
    EstimatorConfig real_config = config;
    real_config.settings = EstimatorSettings::real_only;
    GapEstimate g{
        estimate_invariant(pair, Word{1, 1, 2, 2}, real_config),
        estimate_invariant(pair, Word{1, 2, 1, 2}, real_config),
        0,
        0};
    g.gap_estimate = g.delta_1122.estimate.real() - g.delta_1212.estimate.real();
    g.standard_error = std::hypot(g.delta_1122.stderr_re, g.delta_1212.stderr_re);
    return g;
}

}  // namespace bargmann
