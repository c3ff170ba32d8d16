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

#ifndef BARGMANN_LINALG_H
#define BARGMANN_LINALG_H

#include <span>
#include <vector>

#include "bargmann/matrix.h"

namespace bargmann {

/// tr(M_1 M_2 ... M_k).
///
/// The product is accumulated strictly left to right; the final factor is folded into
/// the trace without forming the last product. Results are bit-reproducible for a fixed
/// argument order.
///
/// Throws ArgumentError on an empty sequence and ShapeError on mixed dimensions.
Complex chain_product_trace(std::span<const ComplexMatrix> matrices);
Complex chain_product_trace(std::span<const ComplexMatrix *const> matrices);

/// tr(A^dagger A), the squared Hilbert-Schmidt norm.
double hs_norm_sq(const ComplexMatrix &a);

/// [A, B] = AB - BA.
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

struct EigenSystem {
    /// Ascending.
    std::vector<double> eigenvalues;
    /// Column k is the eigenvector of eigenvalues[k].
    ComplexMatrix eigenvectors;
};

inline constexpr double kDefaultHermiticityTol = 1e-12;

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Sweeps until the off-diagonal Frobenius mass drops below 1e-14 * ||A||_F, at most
/// 100 sweeps. Throws HermiticityError if max |A - A^dagger| exceeds herm_tol, and
/// NumericError (carrying the sweep count) if the iteration fails to converge.
EigenSystem hermitian_eig(const ComplexMatrix &a, double herm_tol = kDefaultHermiticityTol);

}  // namespace bargmann

#endif
