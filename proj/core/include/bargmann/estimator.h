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

#ifndef BARGMANN_ESTIMATOR_H
#define BARGMANN_ESTIMATOR_H

#include <cstdint>
#include <span>

#include "bargmann/state.h"
#include "bargmann/word.h"

namespace bargmann {

// Shot-level simulation of cycle tests.
//
// An ideal cycle test on the word w measures an ancilla whose "0" outcome has probability
// (1 + Re Delta_w) / 2 (real setting) or (1 + Im Delta_w) / 2 (imaginary setting). Those
// statistics depend on the states only through Delta_w, so each setting is sampled as a
// single binomial draw from the exact invariant instead of simulating the circuit.
//
// Randomness: std::mt19937_64 seeded via std::seed_seq over (seed low 32 bits, seed high
// 32 bits, setting index, word letters...), then std::binomial_distribution. Every
// (seed, word, setting) triple therefore owns an independent, reproducible stream.

enum class EstimatorSettings { real_only, real_and_imag };

struct EstimatorConfig {
    uint64_t shots_per_setting = 1000;
    uint64_t seed = 0;
    EstimatorSettings settings = EstimatorSettings::real_and_imag;
};

struct EstimateResult {
    Word word;
    Complex estimate;
    /// sqrt(1 - x^2) / sqrt(shots) at the estimated component x, floored at 1e-3 / sqrt(shots).
    /// Zero for a component that was not measured.
    double stderr_re;
    double stderr_im;
    /// Total shots across all settings.
    uint64_t shots_used;
};

/// Throws PreconditionError for unnormalized states or zero shots, plus the errors of
/// bargmann_invariant.
EstimateResult estimate_invariant(std::span<const PositiveOperator> states, const Word &word, const EstimatorConfig &config);

struct GapEstimate {
    EstimateResult delta_1122;
    EstimateResult delta_1212;
    double gap_estimate;
    /// Root-sum-square of the two component errors.
    double standard_error;
};

/// Estimates tr(rho1^2 rho2^2) - tr(rho1 rho2 rho1 rho2) from real-setting shots only.
GapEstimate estimate_gap(const PositiveOperator &rho1, const PositiveOperator &rho2, const EstimatorConfig &config);

}  // namespace bargmann

#endif
