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

#ifndef BARGMANN_STATE_H
#define BARGMANN_STATE_H

#include <span>
#include <vector>

#include "bargmann/linalg.h"
#include "bargmann/matrix.h"

namespace bargmann {

struct StateTolerances {
    double hermiticity = 1e-12;
    double positivity = 1e-10;
    double normalization = 1e-9;
};

inline constexpr double kDefaultGapTol = 1e-8;

/// A Hermitian positive semidefinite matrix with positive trace, possibly unnormalized.
///
/// Only obtainable through validate_state, so every instance satisfies the invariants.
class PositiveOperator {
   public:
    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    size_t dim() const {
        return matrix_.dim();
    }
    double trace() const {
        return trace_;
    }
    /// |trace - 1| within the normalization tolerance used at validation.
    bool normalized() const {
        return normalized_;
    }
    /// Smallest eigenvalue seen during validation (may be slightly negative).
    double psd_slack() const {
        return psd_slack_;
    }

   private:
    PositiveOperator(ComplexMatrix matrix, double trace, bool normalized, double psd_slack)
        : matrix_(std::move(matrix)), trace_(trace), normalized_(normalized), psd_slack_(psd_slack) {
    }
    friend PositiveOperator validate_state(const ComplexMatrix &, const StateTolerances &);

    ComplexMatrix matrix_;
    double trace_;
    bool normalized_;
    double psd_slack_;
};

/// Checks Hermiticity, positivity and trace, returning the validated operator.
///
/// The stored matrix is the exact Hermitian part of the input. Throws HermiticityError,
/// PositivityError (with the offending eigenvalue) or TraceError.
PositiveOperator validate_state(const ComplexMatrix &matrix, const StateTolerances &tol = {});

/// tr(rho^2).
double purity(const PositiveOperator &rho);

/// Pads rho with a zero block so it acts on C^new_dim. Throws ArgumentError if new_dim < dim.
PositiveOperator embed(const PositiveOperator &rho, size_t new_dim);

/// Rescales the trace to 1.
PositiveOperator normalize(const PositiveOperator &rho);

struct SpectralProfile {
    std::vector<double> eigenvalues;
    /// Smallest gap between adjacent eigenvalues; +infinity in dimension 1.
    double min_gap;
    bool non_degenerate;
};

SpectralProfile spectral_profile(const PositiveOperator &rho, double gap_tol = kDefaultGapTol);

/// Views over a state list as raw matrices, for the matrix-level kernels.
std::vector<const ComplexMatrix *> matrix_views(std::span<const PositiveOperator> states);

/// Throws ShapeError unless all states share one dimension; returns it.
size_t common_dimension(std::span<const PositiveOperator> states);

}  // namespace bargmann

#endif
