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

#include "bargmann/random.h"

#include <cmath>

#include "bargmann/error.h"

namespace bargmann {

Ensemble parse_ensemble(std::string_view text) {
    if (text == "ginibre_mixed") {
        return Ensemble::ginibre_mixed;
    }
    if (text == "haar_pure") {
        return Ensemble::haar_pure;
    }
    if (text == "random_diagonal") {
        return Ensemble::random_diagonal;
    }
    throw ArgumentError(
        "unknown ensemble '" + std::string(text) + "' (expected ginibre_mixed, haar_pure or random_diagonal)");
}

std::string_view to_string(Ensemble ensemble) {
    switch (ensemble) {
        case Ensemble::ginibre_mixed:
            return "ginibre_mixed";
        case Ensemble::haar_pure:
            return "haar_pure";
        case Ensemble::random_diagonal:
            return "random_diagonal";
    }
    return "?";
}

ComplexMatrix ginibre_matrix(size_t dim, Rng &rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix g(dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            double re = normal(rng);
            double im = normal(rng);
            g(r, c) = Complex(re, im);
        }
    }
    return g;
}

ComplexMatrix haar_unitary(size_t dim, Rng &rng) {
    ComplexMatrix q = ginibre_matrix(dim, rng);
    // Modified Gram-Schmidt on columns. Normalizing each column by its (positive) norm
    // gives R with a positive real diagonal, which makes Q exactly Haar distributed.
    for (size_t k = 0; k < dim; k++) {
        for (size_t j = 0; j < k; j++) {
            Complex overlap = 0;
            for (size_t r = 0; r < dim; r++) {
                overlap += std::conj(q(r, j)) * q(r, k);
            }
            for (size_t r = 0; r < dim; r++) {
                q(r, k) -= overlap * q(r, j);
            }
        }
        double norm = 0;
        for (size_t r = 0; r < dim; r++) {
            norm += std::norm(q(r, k));
        }
        norm = std::sqrt(norm);
        for (size_t r = 0; r < dim; r++) {
            q(r, k) /= norm;
        }
    }
    return q;
}

ComplexMatrix random_hermitian(size_t dim, Rng &rng) {
    return hermitian_part(ginibre_matrix(dim, rng));
}

std::vector<double> random_simplex_point(size_t dim, Rng &rng) {
    std::exponential_distribution<double> exponential(1.0);
    std::vector<double> p(dim);
    double total = 0;
    for (auto &x : p) {
        x = exponential(rng);
        total += x;
    }
    for (auto &x : p) {
        x /= total;
    }
    return p;
}

PositiveOperator random_state(size_t dim, Ensemble ensemble, Rng &rng) {
    if (dim == 0) {
        throw ArgumentError("random_state: dimension must be positive");
    }
    switch (ensemble) {
        case Ensemble::ginibre_mixed: {
            ComplexMatrix g = ginibre_matrix(dim, rng);
            ComplexMatrix rho = hermitian_part(g * g.adjoint());
            rho *= 1 / rho.trace().real();
            return validate_state(rho);
        }
        case Ensemble::haar_pure: {
            ComplexMatrix g = ginibre_matrix(dim, rng);
            std::vector<Complex> v(dim);
            double norm = 0;
            for (size_t k = 0; k < dim; k++) {
                v[k] = g(k, 0);
                norm += std::norm(v[k]);
            }
            norm = std::sqrt(norm);
            for (auto &z : v) {
                z /= norm;
            }
            return validate_state(projector(v));
        }
        case Ensemble::random_diagonal:
            return validate_state(ComplexMatrix::diagonal(random_simplex_point(dim, rng)));
    }
    throw ArgumentError("random_state: unknown ensemble");
}

std::vector<PositiveOperator> commuting_set(size_t dim, size_t n, Rng &rng) {
    if (dim == 0 || n == 0) {
        throw ArgumentError("commuting_set: dimension and count must be positive");
    }
    ComplexMatrix u = haar_unitary(dim, rng);
    ComplexMatrix u_dag = u.adjoint();
    std::vector<PositiveOperator> states;
    states.reserve(n);
    for (size_t k = 0; k < n; k++) {
        auto spectrum = random_simplex_point(dim, rng);
        ComplexMatrix rho = hermitian_part(u * ComplexMatrix::diagonal(spectrum) * u_dag);
        states.push_back(validate_state(rho));
    }
    return states;
}

}  // namespace bargmann
