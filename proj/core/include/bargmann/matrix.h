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

#ifndef BARGMANN_MATRIX_H
#define BARGMANN_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bargmann {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
///
/// Constructors reject a zero dimension, a wrong entry count, and non-finite entries.
/// Element access through operator() is unchecked.
class ComplexMatrix {
   public:
    explicit ComplexMatrix(size_t dim);
    ComplexMatrix(size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// Builds from nested rows; every row must have as many entries as there are rows.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    size_t dim() const {
        return dim_;
    }
    Complex &operator()(size_t row, size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(size_t row, size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    bool operator==(const ComplexMatrix &other) const = default;

    std::string str() const;

   private:
    size_t dim_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
/// Matrix product. Throws ShapeError on dimension mismatch.
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

/// max_ij |a_ij - b_ij|. Throws ShapeError on dimension mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// max_ij |a_ij - conj(a_ji)|.
double hermiticity_deviation(const ComplexMatrix &a);

/// (A + A^dagger) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix &a);

/// Outer product |v><v|.
ComplexMatrix projector(std::span<const Complex> v);

}  // namespace bargmann

#endif
