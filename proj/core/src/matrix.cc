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

#include "bargmann/matrix.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bargmann/error.h"

namespace bargmann {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.dim() != b.dim()) {
        throw ShapeError(
            std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
            ")");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw ArgumentError("ComplexMatrix: dimension must be positive");
    }
}

ComplexMatrix::ComplexMatrix(size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) {
        throw ArgumentError("ComplexMatrix: dimension must be positive");
    }
    if (entries_.size() != dim * dim) {
        throw ShapeError(
            "ComplexMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
            std::to_string(entries_.size()));
    }
    for (const auto &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ArgumentError("ComplexMatrix: entries must be finite");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix result(dim);
    for (size_t k = 0; k < dim; k++) {
        result(k, k) = 1.0;
    }
    return result;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix result(values.size());
    for (size_t k = 0; k < values.size(); k++) {
        result(k, k) = values[k];
    }
    return result;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    size_t dim = rows.size();
    std::vector<Complex> entries;
    entries.reserve(dim * dim);
    for (const auto &row : rows) {
        if (row.size() != dim) {
            throw ShapeError("ComplexMatrix::from_rows: matrix is not square");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return ComplexMatrix(dim, std::move(entries));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix result(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            result(c, r) = std::conj((*this)(r, c));
        }
    }
    return result;
}

Complex ComplexMatrix::trace() const {
    Complex total = 0;
    for (size_t k = 0; k < dim_; k++) {
        total += (*this)(k, k);
    }
    return total;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "operator+");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "operator-");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

std::string ComplexMatrix::str() const {
    std::stringstream out;
    for (size_t r = 0; r < dim_; r++) {
        out << (r == 0 ? "[" : " ");
        for (size_t c = 0; c < dim_; c++) {
            out << (*this)(r, c) << (c + 1 < dim_ ? ", " : "");
        }
        out << (r + 1 < dim_ ? "\n" : "]");
    }
    return out.str();
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(ComplexMatrix a, Complex scale) {
    a *= scale;
    return a;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix a) {
    a *= scale;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "operator*");
    size_t n = a.dim();
    ComplexMatrix result(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t k = 0; k < n; k++) {
            Complex lhs = a(r, k);
            if (lhs == Complex{}) {
                continue;
            }
            for (size_t c = 0; c < n; c++) {
                result(r, c) += lhs * b(k, c);
            }
        }
    }
    return result;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t k = 0; k < ea.size(); k++) {
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    }
    return worst;
}

double hermiticity_deviation(const ComplexMatrix &a) {
    double worst = 0;
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = r; c < a.dim(); c++) {
            worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
        }
    }
    return worst;
}

ComplexMatrix hermitian_part(const ComplexMatrix &a) {
    ComplexMatrix result(a.dim());
    for (size_t r = 0; r < a.dim(); r++) {
        result(r, r) = a(r, r).real();
        for (size_t c = r + 1; c < a.dim(); c++) {
            Complex z = 0.5 * (a(r, c) + std::conj(a(c, r)));
            result(r, c) = z;
            result(c, r) = std::conj(z);
        }
    }
    return result;
}

ComplexMatrix projector(std::span<const Complex> v) {
    ComplexMatrix result(v.size());
    for (size_t r = 0; r < v.size(); r++) {
        for (size_t c = 0; c < v.size(); c++) {
            result(r, c) = v[r] * std::conj(v[c]);
        }
    }
    return result;
}

}  // namespace bargmann
