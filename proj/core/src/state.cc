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

#include "bargmann/state.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "bargmann/error.h"

namespace bargmann {

PositiveOperator validate_state(const ComplexMatrix &matrix, const StateTolerances &tol) {
    double deviation = hermiticity_deviation(matrix);
    if (deviation > tol.hermiticity) {
        std::stringstream msg;
        msg << "state is not Hermitian: max |A - A^dagger| = " << deviation << " exceeds " << tol.hermiticity;
        throw HermiticityError(msg.str(), deviation);
    }
    ComplexMatrix herm = hermitian_part(matrix);
    EigenSystem eig = hermitian_eig(herm, tol.hermiticity);
    double smallest = eig.eigenvalues.front();
    if (smallest < -tol.positivity) {
        std::stringstream msg;
        msg << "state is not positive semidefinite: eigenvalue " << smallest << " is below -" << tol.positivity;
        throw PositivityError(msg.str(), smallest);
    }
    double trace = herm.trace().real();
    if (!(trace > 0)) {
        std::stringstream msg;
        msg << "state trace must be positive, got " << trace;
        throw TraceError(msg.str());
    }
    bool normalized = std::abs(trace - 1) <= tol.normalization;
    return PositiveOperator(std::move(herm), trace, normalized, smallest);
}

double purity(const PositiveOperator &rho) {
    // tr(rho^2) = ||rho||_2^2 for Hermitian rho.
    return hs_norm_sq(rho.matrix());
}

PositiveOperator embed(const PositiveOperator &rho, size_t new_dim) {
    if (new_dim < rho.dim()) {
        throw ArgumentError(
            "embed: target dimension " + std::to_string(new_dim) + " is smaller than " + std::to_string(rho.dim()));
    }
    ComplexMatrix padded(new_dim);
    for (size_t r = 0; r < rho.dim(); r++) {
        for (size_t c = 0; c < rho.dim(); c++) {
            padded(r, c) = rho.matrix()(r, c);
        }
    }
    return validate_state(padded);
}

PositiveOperator normalize(const PositiveOperator &rho) {
    return validate_state(rho.matrix() * Complex(1 / rho.trace()));
}

SpectralProfile spectral_profile(const PositiveOperator &rho, double gap_tol) {
    SpectralProfile profile{hermitian_eig(rho.matrix()).eigenvalues, std::numeric_limits<double>::infinity(), true};
    for (size_t k = 1; k < profile.eigenvalues.size(); k++) {
        profile.min_gap = std::min(profile.min_gap, profile.eigenvalues[k] - profile.eigenvalues[k - 1]);
    }
    profile.non_degenerate = profile.min_gap > gap_tol;
    return profile;
}

std::vector<const ComplexMatrix *> matrix_views(std::span<const PositiveOperator> states) {
    std::vector<const ComplexMatrix *> views;
    views.reserve(states.size());
    for (const auto &s : states) {
        views.push_back(&s.matrix());
    }
    return views;
}

size_t common_dimension(std::span<const PositiveOperator> states) {
    if (states.empty()) {
        throw ArgumentError("expected at least one state");
    }
    size_t dim = states.front().dim();
    for (size_t k = 1; k < states.size(); k++) {
        if (states[k].dim() != dim) {
            throw ShapeError(
                "state " + std::to_string(k + 1) + " has dimension " + std::to_string(states[k].dim()) +
                ", expected " + std::to_string(dim));
        }
    }
    return dim;
}

}  // namespace bargmann
