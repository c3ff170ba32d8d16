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

#include "bargmann/criteria.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bargmann/error.h"
#include "bargmann/linalg.h"

namespace bargmann {

std::string_view to_string(Verdict verdict) {
    return verdict == Verdict::set_incoherent ? "set_incoherent" : "set_coherent";
}

std::string_view to_string(CoherenceMode mode) {
    return mode == CoherenceMode::full ? "full" : "reduced";
}

PairGap commutator_gap(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    if (a.dim() != b.dim()) {
        throw ShapeError(
            "commutator_gap: dimension mismatch (" + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    }
    const ComplexMatrix *aabb[] = {&a, &a, &b, &b};
    const ComplexMatrix *abab[] = {&a, &b, &a, &b};
    Complex llkk = chain_product_trace(aabb);
    Complex lklk = chain_product_trace(abab);

    // |tr(AABB)|, |tr(ABAB)| <= ||A||_2^2 ||B||_2^2, which sets the rounding scale.
    double scale = std::max(1.0, hs_norm_sq(a) * hs_norm_sq(b));
    double residue = std::max(std::abs(llkk.imag()), std::abs(lklk.imag()));
    if (residue > kImaginaryErrorTol * scale) {
        std::stringstream msg;
        msg << "commutator_gap: fourth-order invariants have imaginary residue " << residue
            << "; inputs are not Hermitian";
        throw NumericError(msg.str());
    }

    PairGap result{1, 2, llkk.real(), lklk.real(), 0, false};
    result.gap = result.delta_llkk - result.delta_lklk;
    result.commutes = result.gap <= tol;
    return result;
}

PairGap commutator_gap(const PositiveOperator &a, const PositiveOperator &b, double tol) {
    return commutator_gap(a.matrix(), b.matrix(), tol);
}

CoherenceReport set_coherence_decide(std::span<const PositiveOperator> states, double tol) {
    common_dimension(states);
    size_t n = states.size();
    CoherenceReport report{n, {}, Verdict::set_incoherent, CoherenceMode::full, std::nullopt, 0};
    for (size_t l = 0; l < n; l++) {
        for (size_t k = l + 1; k < n; k++) {
            PairGap pair = commutator_gap(states[l], states[k], tol);
            pair.first = l + 1;
            pair.second = k + 1;
            if (!pair.commutes) {
                report.verdict = Verdict::set_coherent;
            }
            report.pairs.push_back(pair);
        }
    }
    report.invariant_count = 2 * report.pairs.size();
    return report;
}

CoherenceReport reduced_set_coherence(
    std::span<const PositiveOperator> states, size_t reference, double tol, double gap_tol) {
    common_dimension(states);
    size_t n = states.size();
    if (reference == 0 || reference > n) {
        throw ArgumentError(
            "reference label " + std::to_string(reference) + " is out of range 1.." + std::to_string(n));
    }
    SpectralProfile profile = spectral_profile(states[reference - 1], gap_tol);
    if (!profile.non_degenerate) {
        std::stringstream msg;
        msg << "reference state " << reference << " has a degenerate spectrum (min eigenvalue gap " << profile.min_gap
            << " <= " << gap_tol << "); use the full pairwise test";
        throw PreconditionError(msg.str());
    }
    CoherenceReport report{n, {}, Verdict::set_incoherent, CoherenceMode::reduced, reference, 0};
    for (size_t k = 0; k < n; k++) {
        if (k + 1 == reference) {
            continue;
        }
        PairGap pair = commutator_gap(states[reference - 1], states[k], tol);
        pair.first = reference;
        pair.second = k + 1;
        if (!pair.commutes) {
            report.verdict = Verdict::set_coherent;
        }
        report.pairs.push_back(pair);
    }
    report.invariant_count = 2 * report.pairs.size();
    return report;
}

bool winc_membership(double z1122, double z1212, double tol, WincMode mode) {
    if (std::abs(z1122 - z1212) > tol) {
        return false;
    }
    if (z1122 < -tol || z1212 < -tol) {
        return false;
    }
    if (mode == WincMode::normalized && (z1122 > 1 + tol || z1212 > 1 + tol)) {
        return false;
    }
    return true;
}

double qubit_delta1122(double d11, double d22, double d12) {
    return d12 + 0.5 * (d11 * d22 - 1);
}

double qubit_delta1212(double d11, double d22, double d12) {
    return d12 * d12 + 0.5 * (d11 + d22 - d11 * d22 - 1);
}

std::vector<std::string> qubit_overlap_range_warnings(double d11, double d22, double d12) {
    std::vector<std::string> warnings;
    auto check = [&](const char *name, double value, double lo, double hi) {
        if (value < lo - 1e-12 || value > hi + 1e-12) {
            std::stringstream msg;
            msg << name << " = " << value << " lies outside [" << lo << ", " << hi << "]";
            warnings.push_back(msg.str());
        }
    };
    check("d11", d11, 0.5, 1);
    check("d22", d22, 0.5, 1);
    check("d12", d12, 0, 1);
    return warnings;
}

QubitCriterionResult qubit_criterion(double d11, double d22, double d12, double tol) {
    double lhs = (d12 - 0.5) * (d12 - 0.5);
    double rhs = (d11 - 0.5) * (d22 - 0.5);
    double residual = std::abs(lhs - rhs);
    return {residual, residual <= tol};
}

Complex qubit_fourth_order(const Vec3 &r1, const Vec3 &r2, const Vec3 &r3, const Vec3 &r4) {
    double a = (1 + dot(r1, r2)) * (1 + dot(r3, r4)) - (1 - dot(r1, r3)) * (1 - dot(r2, r4)) +
               (1 + dot(r1, r4)) * (1 + dot(r2, r3));
    Vec3 u{}, v{}, w{};
    for (size_t i = 0; i < 3; i++) {
        u[i] = r1[i] + r2[i];
        v[i] = r2[i] + r3[i];
        w[i] = r3[i] + r4[i];
    }
    // det of the matrix with columns u, v, w = u . (v x w).
    double b = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
               u[2] * (v[0] * w[1] - v[1] * w[0]);
    return Complex(a, b) / 8.0;
}

Complex qubit_fourth_order(const BlochVector &r1, const BlochVector &r2, const BlochVector &r3, const BlochVector &r4) {
    auto as_vec3 = [](const BlochVector &r) {
        if (r.convention != BlochConvention::pauli || r.components.size() != 3) {
            throw ArgumentError("qubit_fourth_order: expected pauli-convention qubit Bloch vectors");
        }
        return Vec3{r.components[0], r.components[1], r.components[2]};
    };
    return qubit_fourth_order(as_vec3(r1), as_vec3(r2), as_vec3(r3), as_vec3(r4));
}

ComplexMatrix gram_bloch(std::span<const PositiveOperator> states, BlochConvention convention) {
    common_dimension(states);
    std::vector<BlochVector> vectors;
    vectors.reserve(states.size());
    for (const auto &rho : states) {
        vectors.push_back(bloch_map(rho, convention));
    }
    size_t n = states.size();
    ComplexMatrix gram(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i; j < n; j++) {
            double g = dot(vectors[i].components, vectors[j].components);
            gram(i, j) = g;
            gram(j, i) = g;
        }
    }
    return gram;
}

GramRankResult gram_rank_criterion(std::span<const PositiveOperator> states, double tol, BlochConvention convention) {
    size_t d = common_dimension(states);
    ComplexMatrix gram = gram_bloch(states, convention);
    std::vector<double> eigenvalues = hermitian_eig(gram).eigenvalues;
    double largest = std::max(0.0, eigenvalues.back());
    size_t rank = 0;
    if (largest > 0) {
        rank = static_cast<size_t>(std::count_if(eigenvalues.begin(), eigenvalues.end(), [&](double x) {
            return x > tol * largest;
        }));
    }
    GramRankResult result{std::move(gram), std::move(eigenvalues), rank, d, rank + 1 <= d, d == 2, std::nullopt};
    if (result.conclusive) {
        result.verdict = result.condition_holds ? Verdict::set_incoherent : Verdict::set_coherent;
    }
    return result;
}

FacetReport c3_facet_check(double z12, double z13, double z23, double tol) {
    FacetReport report{
        {z12, z13, z23},
        {1 - (z12 + z13 - z23), 1 - (z12 - z13 + z23), 1 - (-z12 + z13 + z23)},
        true,
        true};
    for (double z : report.point) {
        if (z < -tol || z > 1 + tol) {
            report.box_ok = false;
        }
    }
    report.member = report.box_ok && std::all_of(report.facet_slacks.begin(), report.facet_slacks.end(), [&](double s) {
                        return s >= -tol;
                    });
    return report;
}

std::array<double, 3> c3_overlaps(std::span<const PositiveOperator> states) {
    if (states.size() != 3) {
        throw ArgumentError("c3 facets need exactly 3 states, got " + std::to_string(states.size()));
    }
    common_dimension(states);
    auto overlap = [&](size_t i, size_t j) {
        const ComplexMatrix *pair[] = {&states[i].matrix(), &states[j].matrix()};
        return chain_product_trace(pair).real();
    };
    return {overlap(0, 1), overlap(0, 2), overlap(1, 2)};
}

ImaginarityWitness imaginarity_witness(const PositiveOperator &l, const PositiveOperator &k, const PositiveOperator &s) {
    if (l.dim() != k.dim() || k.dim() != s.dim()) {
        throw ShapeError("imaginarity_witness: states have different dimensions");
    }
    const ComplexMatrix *lks[] = {&l.matrix(), &k.matrix(), &s.matrix()};
    double im_delta = chain_product_trace(lks).imag();
    double radicand = 2 * commutator_gap(k, s).gap;
    if (radicand < -1e-10) {
        std::stringstream msg;
        msg << "imaginarity_witness: negative commutator norm " << radicand;
        throw NumericError(msg.str());
    }
    radicand = std::max(0.0, radicand);
    ImaginarityWitness w{2 * std::abs(im_delta), std::sqrt(purity(l)) * std::sqrt(radicand), false, im_delta};
    w.satisfied = w.lhs <= w.rhs + 1e-10;
    return w;
}

}  // namespace bargmann
