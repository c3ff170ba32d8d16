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

#include <cmath>
#include <limits>

#include "gtest/gtest.h"

#include "bargmann/error.h"
#include "test_util.h"

using namespace bargmann;
using namespace bargmann::testing;

TEST(matrix, construction_rejects_bad_input) {
    ASSERT_THROW(ComplexMatrix(0), ArgumentError);
    ASSERT_THROW(ComplexMatrix(2, std::vector<Complex>(3)), ShapeError);
    ASSERT_THROW(
        ComplexMatrix(1, {Complex(std::numeric_limits<double>::quiet_NaN(), 0)}), ArgumentError);
    ASSERT_THROW(
        ComplexMatrix(1, {Complex(0, std::numeric_limits<double>::infinity())}), ArgumentError);
    ASSERT_THROW(ComplexMatrix::from_rows({{1, 2}, {3}}), ShapeError);
}

TEST(matrix, product_and_adjoint) {
    auto a = ComplexMatrix::from_rows({{1, Complex(0, 1)}, {2, 3}});
    auto b = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
    auto ab = a * b;
    ASSERT_EQ(ab, ComplexMatrix::from_rows({{Complex(0, 1), 1}, {3, 2}}));
    ASSERT_EQ(a.adjoint(), ComplexMatrix::from_rows({{1, 2}, {Complex(0, -1), 3}}));
    ASSERT_THROW(a * ComplexMatrix::identity(3), ShapeError);
}

TEST(chain_product_trace, identity) {
    for (size_t d : {1, 2, 5}) {
        std::vector<ComplexMatrix> ms{ComplexMatrix::identity(d)};
        ASSERT_EQ(chain_product_trace(ms), Complex(static_cast<double>(d), 0));
    }
}

TEST(chain_product_trace, zero_and_plus_projectors) {
    // Direct 2x2 oracle: |0><0| = [[1,0],[0,0]], |+><+| = [[1/2,1/2],[1/2,1/2]],
    // product [[1/2,1/2],[0,0]], trace 1/2.
    std::vector<ComplexMatrix> ms{ket0().matrix(), ket_plus().matrix()};
    ASSERT_NEAR(std::abs(chain_product_trace(ms) - Complex(0.5, 0)), 0, 1e-15);
}

TEST(chain_product_trace, errors) {
    std::vector<ComplexMatrix> empty;
    ASSERT_THROW(chain_product_trace(empty), ArgumentError);
    std::vector<ComplexMatrix> mixed{ComplexMatrix::identity(2), ComplexMatrix::identity(3)};
    ASSERT_THROW(chain_product_trace(mixed), ShapeError);
}

TEST(chain_product_trace, matches_index_sum_oracle) {
    Rng rng(11);
    for (size_t d = 1; d <= 4; d++) {
        for (size_t k = 1; k <= 5; k++) {
            std::vector<ComplexMatrix> ms;
            for (size_t j = 0; j < k; j++) {
                ms.push_back(ginibre_matrix(d, rng));
            }
            Complex expected = index_sum_trace(ms);
            ASSERT_NEAR(std::abs(chain_product_trace(ms) - expected), 0, 1e-12 * std::max(1.0, std::abs(expected)))
                << "d=" << d << " k=" << k;
        }
    }
}

TEST(chain_product_trace, cyclic_and_reversal_properties) {
    Rng rng(12);
    for (int trial = 0; trial < 200; trial++) {
        size_t d = 2 + trial % 6;
        size_t k = 2 + trial % 5;
        std::vector<ComplexMatrix> ms;
        for (size_t j = 0; j < k; j++) {
            ms.push_back(random_hermitian(d, rng));
        }
        Complex base = chain_product_trace(ms);
        double scale = std::max(1.0, std::abs(base));

        auto rotated = ms;
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        ASSERT_NEAR(std::abs(chain_product_trace(rotated) - base), 0, 1e-12 * scale);

        // Reversed product of Hermitian matrices is the adjoint, so its trace is conjugated.
        std::vector<ComplexMatrix> reversed(ms.rbegin(), ms.rend());
        ASSERT_NEAR(std::abs(chain_product_trace(reversed) - std::conj(base)), 0, 1e-12 * scale);
    }
}

TEST(chain_product_trace, bit_reproducible) {
    Rng rng(13);
    std::vector<ComplexMatrix> ms;
    for (int j = 0; j < 6; j++) {
        ms.push_back(ginibre_matrix(7, rng));
    }
    Complex a = chain_product_trace(ms);
    Complex b = chain_product_trace(ms);
    ASSERT_EQ(a, b);
}

TEST(hs_norm_sq, examples) {
    ASSERT_EQ(hs_norm_sq(ComplexMatrix(3)), 0);
    ASSERT_EQ(hs_norm_sq(ComplexMatrix::identity(4)), 4);
    ASSERT_EQ(hs_norm_sq(ComplexMatrix::from_rows({{0, 1}, {0, 0}})), 1);
}

TEST(hs_norm_sq, equals_trace_of_adjoint_product) {
    Rng rng(14);
    for (int trial = 0; trial < 100; trial++) {
        auto a = ginibre_matrix(1 + trial % 8, rng);
        std::vector<ComplexMatrix> pair{a.adjoint(), a};
        double expected = chain_product_trace(pair).real();
        ASSERT_NEAR(hs_norm_sq(a), expected, 1e-12 * expected);
    }
}

TEST(hermitian_eig, diagonal_input) {
    const double diag[] = {0.5, 0.375, 0.125, 0};
    auto eig = hermitian_eig(ComplexMatrix::diagonal(diag));
    std::vector<double> expected{0, 0.125, 0.375, 0.5};
    for (size_t k = 0; k < 4; k++) {
        ASSERT_EQ(eig.eigenvalues[k], expected[k]);
    }
}

TEST(hermitian_eig, pauli_x) {
    // Characteristic polynomial lambda^2 - 1.
    auto eig = hermitian_eig(pauli_x());
    ASSERT_NEAR(eig.eigenvalues[0], -1, 1e-14);
    ASSERT_NEAR(eig.eigenvalues[1], 1, 1e-14);
}

TEST(hermitian_eig, degenerate_identity) {
    auto eig = hermitian_eig(ComplexMatrix::identity(3));
    for (double x : eig.eigenvalues) {
        ASSERT_EQ(x, 1);
    }
    ASSERT_LE(max_abs_diff(eig.eigenvectors.adjoint() * eig.eigenvectors, ComplexMatrix::identity(3)), 1e-15);
}

TEST(hermitian_eig, rejects_non_hermitian) {
    auto m = ComplexMatrix::from_rows({{0, 1}, {0, 0}});
    try {
        hermitian_eig(m);
        FAIL() << "expected HermiticityError";
    } catch (const HermiticityError &e) {
        ASSERT_EQ(e.max_deviation, 1);
    }
}

TEST(hermitian_eig, random_reconstruction_and_orthonormality) {
    Rng rng(15);
    for (size_t d = 1; d <= 16; d++) {
        for (int trial = 0; trial < 5; trial++) {
            ComplexMatrix a = random_hermitian(d, rng);
            EigenSystem eig = hermitian_eig(a);
            const ComplexMatrix &v = eig.eigenvectors;

            ASSERT_LE(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(d)), 1e-10) << "d=" << d;
            ASSERT_TRUE(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));

            ComplexMatrix rebuilt = v * ComplexMatrix::diagonal(eig.eigenvalues) * v.adjoint();
            ASSERT_LE(std::sqrt(hs_norm_sq(rebuilt - a)), 1e-9) << "d=" << d;

            auto oracle = eigen_oracle_eigenvalues(a);
            for (size_t k = 0; k < d; k++) {
                ASSERT_NEAR(eig.eigenvalues[k], oracle[k], 1e-10) << "d=" << d << " k=" << k;
            }
        }
    }
}

TEST(hermitian_eig, larger_dimension_converges) {
    Rng rng(16);
    ComplexMatrix a = random_hermitian(64, rng);
    EigenSystem eig = hermitian_eig(a);
    auto oracle = eigen_oracle_eigenvalues(a);
    for (size_t k = 0; k < 64; k++) {
        ASSERT_NEAR(eig.eigenvalues[k], oracle[k], 1e-9);
    }
}

TEST(commutator, anticommuting_paulis) {
    auto x = pauli_x();
    auto z = ComplexMatrix::from_rows({{1, 0}, {0, -1}});
    // [X, Z] = -2iY, ||.||^2 = 8.
    ASSERT_NEAR(hs_norm_sq(commutator(x, z)), 8, 1e-15);
}
