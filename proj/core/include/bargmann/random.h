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

#ifndef BARGMANN_RANDOM_H
#define BARGMANN_RANDOM_H

#include <random>
#include <string_view>
#include <vector>

#include "bargmann/state.h"

namespace bargmann {

/// All randomness in the library flows through a caller-owned 64-bit Mersenne Twister.
/// Gaussian and exponential variates come from the standard library distributions, so
/// streams are reproducible for a fixed seed with a fixed standard library.
using Rng = std::mt19937_64;

enum class Ensemble { ginibre_mixed, haar_pure, random_diagonal };

Ensemble parse_ensemble(std::string_view text);
std::string_view to_string(Ensemble ensemble);

/// d x d matrix of independent standard complex Gaussians (E|g|^2 = 1).
ComplexMatrix ginibre_matrix(size_t dim, Rng &rng);

/// Haar-distributed unitary: Gram-Schmidt QR of a Ginibre matrix, R with positive diagonal.
ComplexMatrix haar_unitary(size_t dim, Rng &rng);

/// (G + G^dagger) / 2 for a Ginibre G.
ComplexMatrix random_hermitian(size_t dim, Rng &rng);

/// Uniform (flat Dirichlet) point on the probability simplex.
std::vector<double> random_simplex_point(size_t dim, Rng &rng);

/// Normalized random state drawn from the given ensemble.
PositiveOperator random_state(size_t dim, Ensemble ensemble, Rng &rng);

/// n states U D_i U^dagger sharing one Haar-random eigenbasis U, with flat-Dirichlet spectra D_i.
std::vector<PositiveOperator> commuting_set(size_t dim, size_t n, Rng &rng);

}  // namespace bargmann

#endif
