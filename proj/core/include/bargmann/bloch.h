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

#ifndef BARGMANN_BLOCH_H
#define BARGMANN_BLOCH_H

#include <array>
#include <string_view>
#include <vector>

#include "bargmann/state.h"

namespace bargmann {

using Vec3 = std::array<double, 3>;

/// pauli: qubits only, rho = (tr(rho) I + r.P) / 2 with r = (tr rho X, tr rho Y, tr rho Z).
/// orthonormal: r_a = tr(rho T_a) over orthonormal_traceless_basis(d), so that
///   <r_i, r_j> = tr(rho_i rho_j) - tr(rho_i) tr(rho_j) / d.
enum class BlochConvention { pauli, orthonormal };

BlochConvention parse_bloch_convention(std::string_view text);
std::string_view to_string(BlochConvention convention);

struct BlochVector {
    size_t dim;
    std::vector<double> components;
    BlochConvention convention;
};

/// Orthonormal (tr(T_a T_b) = delta_ab) traceless Hermitian basis of d x d matrices.
///
/// Enumeration order, with 0-based indices j < k:
///   1. symmetric  (|j><k| + |k><j|) / sqrt(2),            pairs (j, k) in lexicographic order;
///   2. antisymmetric (-i|j><k| + i|k><j|) / sqrt(2),      same pair order;
///   3. diagonal (sum_{m<l} |m><m| - l |l><l|) / sqrt(l(l+1)), l = 1 .. d-1.
/// For d = 2 this is (X, Y, Z) / sqrt(2).
std::vector<ComplexMatrix> orthonormal_traceless_basis(size_t dim);

/// Throws ArgumentError for the pauli convention when dim != 2.
BlochVector bloch_map(const PositiveOperator &rho, BlochConvention convention);

/// Inverse of bloch_map(., pauli) on the unit ball. Throws PositivityError if |r| > 1 + tol.
PositiveOperator qubit_from_bloch(const Vec3 &r, double tol = 1e-12);

double dot(std::span<const double> a, std::span<const double> b);

}  // namespace bargmann

#endif
