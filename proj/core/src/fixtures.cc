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

#include "bargmann/fixtures.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include "bargmann/bloch.h"
#include "bargmann/criteria.h"
#include "bargmann/error.h"
#include "bargmann/invariants.h"

namespace bargmann {

namespace {

constexpr double kValueTol = 1e-12;
constexpr double kEigenvalueTol = 1e-10;

constexpr double q(int num, int den) {
    return static_cast<double>(num) / static_cast<double>(den);
}

PositiveOperator basis_projector(size_t dim, size_t index) {
    std::vector<Complex> v(dim);
    v[index] = 1;
    return validate_state(projector(v));
}

PositiveOperator pure(std::vector<Complex> v) {
    return validate_state(projector(v));
}

void expect(Fixture &f, std::string quantity, std::string exact, double tolerance = kValueTol) {
    double value = parse_exact(exact);
    f.expected.push_back(Expectation{std::move(quantity), std::move(exact), value, tolerance});
}

void expect_w23(Fixture &f) {
    expect(f, "delta[1,1].re", "13/32");
    expect(f, "delta[1,1,1].re", "23/128");
    expect(f, "delta[2,2].re", "137/450");
    expect(f, "delta[2,2,2].re", "31/300");
    expect(f, "delta[1,2].re", "67/240");
    expect(f, "delta[1,1,2].re", "223/1920");
    expect(f, "delta[1,2,2].re", "653/7200");
}

Fixture mub_trio() {
    const double h = 1 / std::numbers::sqrt2;
    Fixture f{
        "mub_trio",
        "|0>, |+>, |+i>: pairwise overlaps 1/2 yet a complex third-order invariant",
        {basis_projector(2, 0), pure({h, h}), pure({h, Complex(0, h)})},
        {}};
    expect(f, "delta[1,2,3].re", "1/4");
    expect(f, "delta[1,2,3].im", "1/4");
    expect(f, "delta[1,2].re", "1/2");
    expect(f, "delta[1,3].re", "1/2");
    expect(f, "delta[2,3].re", "1/2");
    expect(f, "c3.member", "1");
    expect(f, "gram_c4.eig[0]", "1/2", kEigenvalueTol);
    expect(f, "gram_c4.eig[1]", "1/2", kEigenvalueTol);
    expect(f, "gram_c4.eig[2]", "5/4", kEigenvalueTol);
    expect(f, "set_coherent", "1");
    return f;
}

Fixture main_sigma_trio() {
    Fixture f{
        "main_sigma_trio",
        "|0>, |2>, |4> in C^5: a set-incoherent realization of a vanishing third-order invariant",
        {basis_projector(5, 0), basis_projector(5, 2), basis_projector(5, 4)},
        {}};
    expect(f, "delta[1,2,3].re", "0");
    expect(f, "delta[1,2,3].im", "0");
    expect(f, "set_coherent", "0");
    return f;
}

Fixture main_sigma_prime_trio() {
    const double h = 1 / std::numbers::sqrt2;
    Fixture f{
        "main_sigma_prime_trio",
        "|0>, |+>, |2> in C^3: a set-coherent realization of a vanishing third-order invariant",
        {basis_projector(3, 0), pure({h, h, 0}), basis_projector(3, 2)},
        {}};
    expect(f, "delta[1,2,3].re", "0");
    expect(f, "delta[1,2,3].im", "0");
    expect(f, "set_coherent", "1");
    return f;
}

Fixture trine() {
    const double s = std::sqrt(3.0) / 2;
    Fixture f{
        "trine",
        "coplanar pure qubits with Bloch vectors (1,0,0), (1/2,sqrt3/2,0), (1/2,-sqrt3/2,0)",
        {qubit_from_bloch({1, 0, 0}), qubit_from_bloch({0.5, s, 0}), qubit_from_bloch({0.5, -s, 0})},
        {}};
    expect(f, "delta[1,2].re", "3/4");
    expect(f, "delta[1,3].re", "3/4");
    expect(f, "delta[2,3].re", "1/4");
    expect(f, "facet[1]", "5/4");
    expect(f, "c3.member", "0");
    expect(f, "delta[1,2,3].im", "0");
    expect(f, "delta[1,3,2].im", "0");
    expect(f, "set_coherent", "1");
    return f;
}

Fixture c4_quartet() {
    // rho_k = (|1><1| + |k+1><k+1|) / 2 for k = 1, 2, 3 and rho_4 = (|a><a| + |b><b|) / 2 with
    // |a> = (|1> + |3>) / sqrt2, |b> = (|2> + |4>) / sqrt2; kets are 1-based here.
    std::vector<PositiveOperator> states;
    for (size_t k = 1; k <= 3; k++) {
        ComplexMatrix m(4);
        m(0, 0) = 0.5;
        m(k, k) = 0.5;
        states.push_back(validate_state(m));
    }
    ComplexMatrix m4(4);
    for (auto [i, j] : {std::pair<size_t, size_t>{0, 2}, {1, 3}}) {
        m4(i, i) = 0.25;
        m4(j, j) = 0.25;
        m4(i, j) = 0.25;
        m4(j, i) = 0.25;
    }
    states.push_back(validate_state(m4));

    Fixture f{
        "c4_quartet",
        "four rank-2 states in C^4 with equal overlaps whose Bloch Gram matrix has full rank",
        std::move(states),
        {}};
    for (int i = 1; i <= 4; i++) {
        expect(f, "delta[" + std::to_string(i) + "," + std::to_string(i) + "].re", "1/2");
    }
    for (int i = 1; i <= 4; i++) {
        for (int j = i + 1; j <= 4; j++) {
            expect(f, "delta[" + std::to_string(i) + "," + std::to_string(j) + "].re", "1/4");
        }
    }
    expect(f, "delta[1,2,3].re", "1/8");
    expect(f, "delta[1,2,4].re", "1/16");
    expect(f, "delta[1,3,4].re", "1/16");
    expect(f, "delta[2,3,4].re", "1/16");
    expect(f, "delta[1,2,3,4].re", "1/32");
    expect(f, "delta[1,2,3,4].im", "0");
    for (int i = 1; i <= 4; i++) {
        for (int j = 1; j <= 4; j++) {
            expect(f, "gram[" + std::to_string(i) + "," + std::to_string(j) + "]", i == j ? "1/4" : "0");
        }
    }
    expect(f, "gram.rank", "4");
    expect(f, "set_coherent", "1");
    return f;
}

PositiveOperator emc_rho1() {
    const double diag[] = {q(1, 2), q(3, 8), q(1, 8), 0};
    return validate_state(ComplexMatrix::diagonal(diag));
}

Fixture emc_rho_pair() {
    const double diag[] = {q(4, 15), q(1, 3), q(1, 6), q(7, 30)};
    ComplexMatrix rho2 = ComplexMatrix::diagonal(diag);
    // + R / 10 with R = |1><3| + |3><1| + |2><4| + |4><2| (1-based kets).
    rho2(0, 2) = rho2(2, 0) = q(1, 10);
    rho2(1, 3) = rho2(3, 1) = q(1, 10);
    Fixture f{
        "emc_rho_pair",
        "noncommuting pair in C^4 sharing every 2- and 3-letter invariant with emc_sigma_pair",
        {emc_rho1(), validate_state(rho2)},
        {}};
    expect(f, "gap[1,2]", "9/3200");
    expect_w23(f);
    expect(f, "set_coherent", "1");
    return f;
}

Fixture emc_sigma_pair() {
    const double diag[] = {q(11, 30), q(2, 15), q(11, 30), q(2, 15)};
    Fixture f{
        "emc_sigma_pair",
        "commuting diagonal pair in C^4 matching emc_rho_pair on every 2- and 3-letter invariant",
        {emc_rho1(), validate_state(ComplexMatrix::diagonal(diag))},
        {}};
    expect(f, "gap[1,2]", "0");
    expect_w23(f);
    expect(f, "set_coherent", "0");
    return f;
}

// "name[...]" -> contents between the brackets; "" if the prefix does not match.
std::string_view bracket_arg(std::string_view quantity, std::string_view prefix, std::string_view suffix = "") {
    if (quantity.size() < prefix.size() + suffix.size() + 2 || quantity.substr(0, prefix.size()) != prefix ||
        quantity[prefix.size()] != '[' || quantity.substr(quantity.size() - suffix.size()) != suffix ||
        quantity[quantity.size() - suffix.size() - 1] != ']') {
        return {};
    }
    return quantity.substr(prefix.size() + 1, quantity.size() - prefix.size() - suffix.size() - 2);
}

size_t parse_index(std::string_view text) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("invalid index '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

std::vector<std::string> fixture_names() {
    return {
        "mub_trio",
        "main_sigma_trio",
        "main_sigma_prime_trio",
        "trine",
        "c4_quartet",
        "emc_rho_pair",
        "emc_sigma_pair"};
}

Fixture fixture(std::string_view name) {
    if (name == "mub_trio") return mub_trio();
    if (name == "main_sigma_trio") return main_sigma_trio();
    if (name == "main_sigma_prime_trio") return main_sigma_prime_trio();
    if (name == "trine") return trine();
    if (name == "c4_quartet") return c4_quartet();
    if (name == "emc_rho_pair") return emc_rho_pair();
    if (name == "emc_sigma_pair") return emc_sigma_pair();
    throw ArgumentError("unknown fixture '" + std::string(name) + "'");
}

double parse_exact(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
            throw ParseError("invalid exact value '" + std::string(text) + "'");
        }
        return value;
    };
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return static_cast<double>(parse_int(text));
    }
    long long den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw ParseError("invalid exact value '" + std::string(text) + "': zero denominator");
    }
    return static_cast<double>(parse_int(text.substr(0, slash))) / static_cast<double>(den);
}

double evaluate_quantity(std::span<const PositiveOperator> states, std::string_view quantity) {
    if (auto arg = bracket_arg(quantity, "delta", ".re"); !arg.empty()) {
        return bargmann_invariant(states, parse_word(arg)).real();
    }
    if (auto arg = bracket_arg(quantity, "delta", ".im"); !arg.empty()) {
        return bargmann_invariant(states, parse_word(arg)).imag();
    }
    if (auto arg = bracket_arg(quantity, "gap"); !arg.empty()) {
        Word w = parse_word(arg);
        if (w.size() != 2 || w.max_letter() > states.size()) {
            throw ArgumentError("gap needs two valid labels, got '" + std::string(arg) + "'");
        }
        return commutator_gap(states[w.letters()[0] - 1], states[w.letters()[1] - 1]).gap;
    }
    if (auto arg = bracket_arg(quantity, "gram"); !arg.empty()) {
        Word w = parse_word(arg);
        if (w.size() != 2 || w.max_letter() > states.size()) {
            throw ArgumentError("gram needs two valid indices, got '" + std::string(arg) + "'");
        }
        return gram_bloch(states, BlochConvention::orthonormal)(w.letters()[0] - 1, w.letters()[1] - 1).real();
    }
    if (quantity == "gram.rank") {
        return static_cast<double>(gram_rank_criterion(states).rank);
    }
    if (auto arg = bracket_arg(quantity, "gram_c4.eig"); !arg.empty()) {
        std::vector<PositiveOperator> embedded;
        for (const auto &s : states) {
            embedded.push_back(embed(s, 4));
        }
        auto eigenvalues = hermitian_eig(gram_bloch(embedded, BlochConvention::orthonormal)).eigenvalues;
        size_t k = parse_index(arg);
        if (k >= eigenvalues.size()) {
            throw ArgumentError("gram eigenvalue index out of range");
        }
        return eigenvalues[k];
    }
    if (auto arg = bracket_arg(quantity, "facet"); !arg.empty()) {
        size_t f = parse_index(arg);
        if (f < 1 || f > 3) {
            throw ArgumentError("facet index must be 1, 2 or 3");
        }
        auto z = c3_overlaps(states);
        return 1 - c3_facet_check(z[0], z[1], z[2]).facet_slacks[f - 1];
    }
    if (quantity == "c3.member") {
        auto z = c3_overlaps(states);
        return c3_facet_check(z[0], z[1], z[2]).member ? 1 : 0;
    }
    if (quantity == "set_coherent") {
        return set_coherence_decide(states).verdict == Verdict::set_coherent ? 1 : 0;
    }
    throw ArgumentError("unknown fixture quantity '" + std::string(quantity) + "'");
}

PaperCheckReport paper_check(std::span<const Fixture> fixtures) {
    PaperCheckReport report{{}, true, 0, {}};
    if (fixtures.empty()) {
        report.warnings.push_back("no fixtures selected; nothing was checked");
        return report;
    }
    for (const auto &f : fixtures) {
        for (const auto &e : f.expected) {
            PaperCheckRow row{f.name, e.quantity, e.exact, e.value, std::numeric_limits<double>::quiet_NaN(),
                              std::numeric_limits<double>::infinity(), false};
            try {
                row.computed = evaluate_quantity(f.states, e.quantity);
                row.abs_error = std::abs(row.computed - row.expected);
                row.pass = row.abs_error <= e.tolerance;
            } catch (const Error &err) {
                report.warnings.push_back(f.name + " " + e.quantity + ": " + err.what());
            }
            report.passed = report.passed && row.pass;
            report.max_abs_error = std::max(report.max_abs_error, row.abs_error);
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

PaperCheckReport paper_check(std::span<const std::string> names) {
    std::vector<Fixture> selected;
    for (const auto &name : names) {
        selected.push_back(fixture(name));
    }
    return paper_check(selected);
}

PaperCheckReport paper_check() {
    auto names = fixture_names();
    return paper_check(std::span<const std::string>(names));
}

}  // namespace bargmann
