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

#ifndef BARGMANN_CRITERIA_H
#define BARGMANN_CRITERIA_H

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bargmann/bloch.h"
#include "bargmann/state.h"

namespace bargmann {

/// Default threshold on the commutator gap. The gap equals half the squared
/// Hilbert-Schmidt norm of the commutator, so an absolute scale is meaningful for
/// states of trace at most one.
inline constexpr double kDefaultCommutationTol = 1e-10;
/// Imaginary residue allowed on invariants that are provably real before it is discarded.
inline constexpr double kRealnessTol = 1e-10;
/// Imaginary residue (relative to the operands' norms) beyond which the input is rejected.
inline constexpr double kImaginaryErrorTol = 1e-8;
inline constexpr double kDefaultFacetTol = 1e-9;
inline constexpr double kDefaultRankTol = 1e-10;

enum class Verdict { set_incoherent, set_coherent };
enum class CoherenceMode { full, reduced };

std::string_view to_string(Verdict verdict);
std::string_view to_string(CoherenceMode mode);

// ---------------------------------------------------------------------------
// Universal fourth-order criterion.
// ---------------------------------------------------------------------------

/// Fourth-order invariants of the pair (rho_l, rho_k), 1-based labels.
struct PairGap {
    size_t first;
    size_t second;
    /// tr(rho_l^2 rho_k^2)
    double delta_llkk;
    /// tr(rho_l rho_k rho_l rho_k)
    double delta_lklk;
    /// delta_llkk - delta_lklk = ||[rho_l, rho_k]||_2^2 / 2 >= 0.
    double gap;
    bool commutes;
};

/// Decides [A, B] = 0 through tr(A^2 B^2) = tr(ABAB).
///
/// Accepts arbitrary Hermitian operators; positivity is not needed. The two invariants
/// are real for Hermitian inputs, so their imaginary parts are dropped; an imaginary
/// residue above 1e-8 * ||A||_2^2 ||B||_2^2 throws NumericError. Throws ShapeError on
/// dimension mismatch.
PairGap commutator_gap(const ComplexMatrix &a, const ComplexMatrix &b, double tol = kDefaultCommutationTol);
PairGap commutator_gap(const PositiveOperator &a, const PositiveOperator &b, double tol = kDefaultCommutationTol);

struct CoherenceReport {
    size_t n;
    std::vector<PairGap> pairs;
    Verdict verdict;
    CoherenceMode mode;
    /// 1-based label of the reference state in reduced mode.
    std::optional<size_t> reference;
    /// Fourth-order invariants evaluated, two per pair.
    size_t invariant_count;
};

/// All n(n-1)/2 pairs; set incoherent iff every pair commutes.
CoherenceReport set_coherence_decide(std::span<const PositiveOperator> states, double tol = kDefaultCommutationTol);

/// Tests only the pairs (reference, i), i != reference.
///
/// Sound because a state with non-degenerate spectrum commutes only with operators
/// diagonal in its eigenbasis. `reference` is a 1-based label. Throws PreconditionError
/// (naming the minimal eigenvalue gap) if the reference spectrum is degenerate at gap_tol,
/// and ArgumentError if the label is out of range.
CoherenceReport reduced_set_coherence(
    std::span<const PositiveOperator> states,
    size_t reference,
    double tol = kDefaultCommutationTol,
    double gap_tol = kDefaultGapTol);

/// Whether (z1122, z1212) lies in the incoherent region {z in [0,1]^2 : z1122 = z1212}.
/// In cone mode (unnormalized states) the box is replaced by nonnegativity.
enum class WincMode { normalized, cone };
bool winc_membership(double z1122, double z1212, double tol = kDefaultCommutationTol, WincMode mode = WincMode::normalized);

// ---------------------------------------------------------------------------
// Qubit reductions. Inputs are overlaps of normalized qubit states:
// d11 = tr(rho1^2), d22 = tr(rho2^2), d12 = tr(rho1 rho2).
// ---------------------------------------------------------------------------

/// tr(rho1^2 rho2^2) = d12 + (d11 d22 - 1) / 2
double qubit_delta1122(double d11, double d22, double d12);
/// tr(rho1 rho2 rho1 rho2) = d12^2 + (d11 + d22 - d11 d22 - 1) / 2
double qubit_delta1212(double d11, double d22, double d12);

/// Messages for inputs outside the ranges normalized qubits can produce
/// (d11, d22 in [1/2, 1], d12 in [0, 1]). Estimates may legitimately fall outside,
/// so these are warnings.
std::vector<std::string> qubit_overlap_range_warnings(double d11, double d22, double d12);

struct QubitCriterionResult {
    /// |(d12 - 1/2)^2 - (d11 - 1/2)(d22 - 1/2)|
    double residual;
    bool commutes;
};

QubitCriterionResult qubit_criterion(double d11, double d22, double d12, double tol = kDefaultCommutationTol);

/// tr(rho1 rho2 rho3 rho4) of qubits from their pauli Bloch vectors: (a + i b) / 8 with
///   a = (1 + r1.r2)(1 + r3.r4) - (1 - r1.r3)(1 - r2.r4) + (1 + r1.r4)(1 + r2.r3)
///   b = det(r1 + r2, r2 + r3, r3 + r4).
Complex qubit_fourth_order(const Vec3 &r1, const Vec3 &r2, const Vec3 &r3, const Vec3 &r4);
/// Same, taking pauli-convention BlochVectors. Throws ArgumentError for other conventions.
Complex qubit_fourth_order(const BlochVector &r1, const BlochVector &r2, const BlochVector &r3, const BlochVector &r4);

// ---------------------------------------------------------------------------
// Gram matrix of Bloch vectors.
// ---------------------------------------------------------------------------

/// G_ij = <r_i, r_j>. Throws ArgumentError for pauli with dim != 2.
ComplexMatrix gram_bloch(std::span<const PositiveOperator> states, BlochConvention convention);

struct GramRankResult {
    ComplexMatrix gram;
    /// Ascending.
    std::vector<double> eigenvalues;
    /// Eigenvalues above tol * max eigenvalue.
    size_t rank;
    size_t dim;
    /// rank <= dim - 1. Necessary for set incoherence in every dimension.
    bool condition_holds;
    /// For qubits the rank condition is also sufficient, so `verdict` is conclusive.
    bool conclusive;
    /// Present only when conclusive.
    std::optional<Verdict> verdict;
};

GramRankResult gram_rank_criterion(
    std::span<const PositiveOperator> states,
    double tol = kDefaultRankTol,
    BlochConvention convention = BlochConvention::orthonormal);

// ---------------------------------------------------------------------------
// Three-cycle event-graph polytope.
// ---------------------------------------------------------------------------

struct FacetReport {
    /// (z12, z13, z23)
    std::array<double, 3> point;
    /// 1 - (z12 + z13 - z23), 1 - (z12 - z13 + z23), 1 - (-z12 + z13 + z23)
    std::array<double, 3> facet_slacks;
    bool box_ok;
    bool member;
};

FacetReport c3_facet_check(double z12, double z13, double z23, double tol = kDefaultFacetTol);

/// Real parts of (tr rho1 rho2, tr rho1 rho3, tr rho2 rho3). Requires exactly three states.
std::array<double, 3> c3_overlaps(std::span<const PositiveOperator> states);

// ---------------------------------------------------------------------------
// Imaginarity witness.
// ---------------------------------------------------------------------------

struct ImaginarityWitness {
    /// 2 |Im tr(rho_l rho_k rho_s)|
    double lhs;
    /// sqrt(tr rho_l^2) * sqrt(2 (Delta_kkss - Delta_ksks))
    double rhs;
    bool satisfied;
    /// Im tr(rho_l rho_k rho_s)
    double im_delta;
};

/// Throws NumericError if 2 (Delta_kkss - Delta_ksks) < -1e-10 (it is clamped to 0 above that).
ImaginarityWitness imaginarity_witness(const PositiveOperator &l, const PositiveOperator &k, const PositiveOperator &s);

}  // namespace bargmann

#endif
