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

#ifndef BARGMANN_FIXTURES_H
#define BARGMANN_FIXTURES_H

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bargmann/state.h"

namespace bargmann {

/// A published value attached to a fixture.
///
/// `quantity` names what to compute from the fixture's states:
///   delta[l1,...,lm].re / .im   real / imaginary part of the invariant of that word
///   gap[l,k]                    commutator gap of the pair
///   gram[i,j]                   orthonormal-convention Gram matrix entry (1-based)
///   gram.rank                   numerical rank of that Gram matrix
///   gram_c4.eig[k]              k-th ascending Gram eigenvalue after embedding into C^4 (0-based k)
///   facet[f]                    value of the f-th three-cycle facet expression, f = 1, 2, 3
///   c3.member                   1 if the overlaps satisfy every three-cycle constraint, else 0
///   set_coherent                1 if the full pairwise test finds a noncommuting pair, else 0
struct Expectation {
    std::string quantity;
    /// Exact value as an integer or fraction, e.g. "9/3200".
    std::string exact;
    double value;
    double tolerance;
};

struct Fixture {
    std::string name;
    std::string description;
    std::vector<PositiveOperator> states;
    std::vector<Expectation> expected;
};

/// Names: mub_trio, main_sigma_trio, main_sigma_prime_trio, trine, c4_quartet,
/// emc_rho_pair, emc_sigma_pair.
std::vector<std::string> fixture_names();

/// Throws ArgumentError for unknown names.
Fixture fixture(std::string_view name);

/// Parses "p/q", "-p/q" or an integer into a double. Throws ParseError.
double parse_exact(std::string_view text);

/// Computes one quantity (see Expectation) from a fixture's states.
double evaluate_quantity(std::span<const PositiveOperator> states, std::string_view quantity);

struct PaperCheckRow {
    std::string fixture;
    std::string quantity;
    std::string exact;
    double expected;
    double computed;
    double abs_error;
    bool pass;
};

struct PaperCheckReport {
    std::vector<PaperCheckRow> rows;
    bool passed;
    double max_abs_error;
    std::vector<std::string> warnings;
};

/// Evaluates every expectation of the given fixtures. Failures are reported as rows,
/// never thrown; an empty selection passes vacuously with a warning.
PaperCheckReport paper_check(std::span<const Fixture> fixtures);
PaperCheckReport paper_check(std::span<const std::string> names);
/// All fixtures.
PaperCheckReport paper_check();

}  // namespace bargmann

#endif
