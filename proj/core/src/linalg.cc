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

#include "bargmann/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bargmann/error.h"

namespace bargmann {

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiRelativeTol = 1e-14;

// tr(P M) = sum_ij P_ij M_ji.
Complex trace_of_product(const ComplexMatrix &p, const ComplexMatrix &m) {
    Complex total = 0;
    size_t n = p.dim();
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            total += p(i, j) * m(j, i);
        }
    }
    return total;
}

template <typename Get>
Complex chain_trace_impl(size_t count, Get get) {
    if (count == 0) {
        throw ArgumentError("chain_product_trace: empty sequence");
    }
    size_t dim = get(0).dim();
    for (size_t k = 1; k < count; k++) {
        if (get(k).dim() != dim) {
            throw ShapeError(
                "chain_product_trace: matrix " + std::to_string(k) + " has dimension " +
                std::to_string(get(k).dim()) + ", expected " + std::to_string(dim));
        }
    }
    if (count == 1) {
        return get(0).trace();
    }
    if (count == 2) {
        return trace_of_product(get(0), get(1));
    }
    ComplexMatrix acc = get(0) * get(1);
    for (size_t k = 2; k + 1 < count; k++) {
        acc = acc * get(k);
    }
    return trace_of_product(acc, get(count - 1));
}

double off_diagonal_norm_sq(const ComplexMatrix &a) {
    double total = 0;
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < a.dim(); c++) {
            if (r != c) {
                total += std::norm(a(r, c));
            }
        }
    }
    return total;
}

// Applies A <- U^dagger A U and V <- V U, where U acts on the (p, q) plane as
//   [ c               s            ]
//   [ -s e^{-i phi}   c e^{-i phi} ]
// with A_pq = |A_pq| e^{i phi}. The rotation zeroes A_pq.
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, size_t p, size_t q) {
    Complex apq = a(p, q);
    double mag = std::abs(apq);
    if (mag == 0) {
        return;
    }
    Complex phase = std::conj(apq) / mag;  // e^{-i phi}
    double app = a(p, p).real();
    double aqq = a(q, q).real();
    double theta = (aqq - app) / (2 * mag);
    double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
    double c = 1 / std::sqrt(t * t + 1);
    double s = t * c;

    Complex upp = c;
    Complex upq = s;
    Complex uqp = -s * phase;
    Complex uqq = c * phase;

    size_t n = a.dim();
    for (size_t k = 0; k < n; k++) {
        Complex akp = a(k, p);
        Complex akq = a(k, q);
        a(k, p) = akp * upp + akq * uqp;
        a(k, q) = akp * upq + akq * uqq;
    }
    for (size_t k = 0; k < n; k++) {
        Complex apk = a(p, k);
        Complex aqk = a(q, k);
        a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
        a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
    }
    a(p, q) = 0;
    a(q, p) = 0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (size_t k = 0; k < n; k++) {
        Complex vkp = v(k, p);
        Complex vkq = v(k, q);
        v(k, p) = vkp * upp + vkq * uqp;
        v(k, q) = vkp * upq + vkq * uqq;
    }
}

}  // namespace

Complex chain_product_trace(std::span<const ComplexMatrix> matrices) {
    return chain_trace_impl(matrices.size(), [&](size_t k) -> const ComplexMatrix & {
        return matrices[k];
    });
}

Complex chain_product_trace(std::span<const ComplexMatrix *const> matrices) {
    return chain_trace_impl(matrices.size(), [&](size_t k) -> const ComplexMatrix & {
        return *matrices[k];
    });
}

double hs_norm_sq(const ComplexMatrix &a) {
    double total = 0;
    for (const auto &z : a.entries()) {
        total += std::norm(z);
    }
    return total;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a * b - b * a;
}

EigenSystem hermitian_eig(const ComplexMatrix &input, double herm_tol) {
    double deviation = hermiticity_deviation(input);
    if (deviation > herm_tol) {
        throw HermiticityError(
            "hermitian_eig: matrix is not Hermitian (max |A - A^dagger| = " + std::to_string(deviation) + ")",
            deviation);
    }
    size_t n = input.dim();
    ComplexMatrix a = hermitian_part(input);
    ComplexMatrix v = ComplexMatrix::identity(n);

    double threshold = kJacobiRelativeTol * std::sqrt(hs_norm_sq(a));
    int sweep = 0;
    while (std::sqrt(off_diagonal_norm_sq(a)) > threshold) {
        if (sweep == kMaxJacobiSweeps) {
            throw NumericError(
                "hermitian_eig: Jacobi iteration did not converge after " + std::to_string(sweep) + " sweeps");
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                jacobi_rotate(a, v, p, q);
            }
        }
        sweep++;
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    EigenSystem result{std::vector<double>(n), ComplexMatrix(n)};
    for (size_t k = 0; k < n; k++) {
        result.eigenvalues[k] = a(order[k], order[k]).real();
        for (size_t r = 0; r < n; r++) {
            result.eigenvectors(r, k) = v(r, order[k]);
        }
    }
    return result;
}

}  // namespace bargmann
