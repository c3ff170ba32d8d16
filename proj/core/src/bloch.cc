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

#include "bargmann/bloch.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bargmann/error.h"

namespace bargmann {

BlochConvention parse_bloch_convention(std::string_view text) {
    if (text == "pauli") {
        return BlochConvention::pauli;
    }
    if (text == "orthonormal") {
        return BlochConvention::orthonormal;
    }
    throw ArgumentError("unknown Bloch convention '" + std::string(text) + "' (expected pauli or orthonormal)");
}

std::string_view to_string(BlochConvention convention) {
    return convention == BlochConvention::pauli ? "pauli" : "orthonormal";
}

std::vector<ComplexMatrix> orthonormal_traceless_basis(size_t dim) {
    const double inv_sqrt2 = 1 / std::numbers::sqrt2;
    const Complex i{0, 1};
    std::vector<ComplexMatrix> basis;
    basis.reserve(dim * dim - 1);
    for (size_t j = 0; j < dim; j++) {
        for (size_t k = j + 1; k < dim; k++) {
            ComplexMatrix t(dim);
            t(j, k) = inv_sqrt2;
            t(k, j) = inv_sqrt2;
            basis.push_back(std::move(t));
        }
    }
    for (size_t j = 0; j < dim; j++) {
        for (size_t k = j + 1; k < dim; k++) {
            ComplexMatrix t(dim);
            t(j, k) = -i * inv_sqrt2;
            t(k, j) = i * inv_sqrt2;
            basis.push_back(std::move(t));
        }
    }
    for (size_t l = 1; l < dim; l++) {
        ComplexMatrix t(dim);
        double norm = std::sqrt(static_cast<double>(l * (l + 1)));
        for (size_t m = 0; m < l; m++) {
            t(m, m) = 1 / norm;
        }
        t(l, l) = -static_cast<double>(l) / norm;
        basis.push_back(std::move(t));
    }
    return basis;
}

BlochVector bloch_map(const PositiveOperator &rho, BlochConvention convention) {
    const ComplexMatrix &m = rho.matrix();
    size_t d = rho.dim();
    if (convention == BlochConvention::pauli) {
        if (d != 2) {
            throw ArgumentError("pauli Bloch convention requires dimension 2, got " + std::to_string(d));
        }
        return BlochVector{
            2,
            {2 * m(0, 1).real(), -2 * m(0, 1).imag(), m(0, 0).real() - m(1, 1).real()},
            BlochConvention::pauli};
    }

    // Closed forms of tr(rho T_a) for the basis enumerated in orthonormal_traceless_basis.
    BlochVector r{d, {}, BlochConvention::orthonormal};
    r.components.reserve(d * d - 1);
    for (size_t j = 0; j < d; j++) {
        for (size_t k = j + 1; k < d; k++) {
            r.components.push_back(std::numbers::sqrt2 * m(j, k).real());
        }
    }
    for (size_t j = 0; j < d; j++) {
        for (size_t k = j + 1; k < d; k++) {
            r.components.push_back(-std::numbers::sqrt2 * m(j, k).imag());
        }
    }
    double prefix = 0;
    for (size_t l = 1; l < d; l++) {
        prefix += m(l - 1, l - 1).real();
        double norm = std::sqrt(static_cast<double>(l * (l + 1)));
        r.components.push_back((prefix - static_cast<double>(l) * m(l, l).real()) / norm);
    }
    return r;
}

PositiveOperator qubit_from_bloch(const Vec3 &r, double tol) {
    double norm = std::sqrt(dot(r, r));
    if (norm > 1 + tol) {
        std::stringstream msg;
        msg << "Bloch vector norm " << norm << " exceeds 1; not a valid qubit state";
        throw PositivityError(msg.str(), (1 - norm) / 2);
    }
    const Complex i{0, 1};
    auto m = ComplexMatrix::from_rows({
        {0.5 * (1 + r[2]), 0.5 * (r[0] - i * r[1])},
        {0.5 * (r[0] + i * r[1]), 0.5 * (1 - r[2])},
    });
    return validate_state(m);
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw ShapeError("dot: length mismatch");
    }
    double total = 0;
    for (size_t k = 0; k < a.size(); k++) {
        total += a[k] * b[k];
    }
    return total;
}

}  // namespace bargmann
