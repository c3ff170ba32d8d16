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


// Acceptance gate: one PASS/FAIL line per criterion; exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "bargmann/bargmann.h"
#include "cli.h"
#include "test_util.h"

using namespace bargmann;
using namespace bargmann::testing;

namespace {

// Collects the first few failure messages of one criterion.
class Check {
   public:
    void expect(bool ok, const std::string &what) {
        if (!ok) {
            failures_++;
            if (notes_.size() < 3) {
                notes_.push_back(what);
            }
        }
    }
    void near(double actual, double expected, double tol, const std::string &what) {
        std::stringstream msg;
        msg.precision(17);
        msg << what << ": got " << actual << ", want " << expected << " +- " << tol;
        expect(std::abs(actual - expected) <= tol, msg.str());
    }
    void note(const std::string &text) {
        summary_ = text;
    }
    bool ok() const {
        return failures_ == 0;
    }
    std::string detail() const {
        if (ok()) {
            return summary_;
        }
        std::string out = std::to_string(failures_) + " failure(s)";
        for (const auto &n : notes_) {
            out += "; " + n;
        }
        return out;
    }

   private:
    int failures_ = 0;
    std::vector<std::string> notes_;
    std::string summary_;
};

std::string fmt(double x) {
    std::stringstream s;
    s.precision(3);
    s << x;
    return s.str();
}

void c4_pair_gap(Check &c) {
    auto rho = fixture("emc_rho_pair").states;
    auto sigma = fixture("emc_sigma_pair").states;
    c.near(commutator_gap(rho[0], rho[1]).gap, 9.0 / 3200, 1e-12, "rho gap");
    c.near(commutator_gap(sigma[0], sigma[1]).gap, 0, 1e-12, "sigma gap");
    c.note("rho gap 9/3200, sigma gap 0");
}

void c4_pair_matching(Check &c) {
    const std::vector<std::pair<Word, double>> expected{
        {{1, 1}, 13.0 / 32},
        {{1, 1, 1}, 23.0 / 128},
        {{2, 2}, 137.0 / 450},
        {{2, 2, 2}, 31.0 / 300},
        {{1, 2}, 67.0 / 240},
        {{1, 1, 2}, 223.0 / 1920},
        {{1, 2, 2}, 653.0 / 7200}};
    auto rho = evaluate_scenario(fixture("emc_rho_pair").states, scenario_catalog("w23"));
    auto sigma = evaluate_scenario(fixture("emc_sigma_pair").states, scenario_catalog("w23"));
    for (const auto &[w, value] : expected) {
        c.near(rho.at(w).real(), value, 1e-12, "rho " + w.str());
        c.near(sigma.at(w).real(), value, 1e-12, "sigma " + w.str());
        c.near(std::abs(rho.at(w) - sigma.at(w)), 0, 1e-12, "pair difference " + w.str());
    }
    c.note("7 invariants matched on both pairs");
}

void mub_trio_check(Check &c) {
    auto mub = fixture("mub_trio").states;
    Complex delta = bargmann_invariant(mub, Word{1, 2, 3});
    c.near(delta.real(), 0.25, 1e-12, "Re delta123");
    c.near(delta.imag(), 0.25, 1e-12, "Im delta123");
    std::vector<PositiveOperator> embedded;
    for (const auto &s : mub) {
        embedded.push_back(embed(s, 4));
    }
    auto eig = gram_rank_criterion(embedded).eigenvalues;
    c.expect(eig.size() == 3, "three Gram eigenvalues");
    if (eig.size() == 3) {
        c.near(eig[0], 0.5, 1e-10, "gram eig 0");
        c.near(eig[1], 0.5, 1e-10, "gram eig 1");
        c.near(eig[2], 1.25, 1e-10, "gram eig 2");
    }
    c.note("delta123 = 0.25+0.25i, Gram eigenvalues (0.5, 0.5, 1.25)");
}

void trine_check(Check &c) {
    auto trine = fixture("trine").states;
    auto z = c3_overlaps(trine);
    c.near(z[0], 0.75, 1e-12, "z12");
    c.near(z[1], 0.75, 1e-12, "z13");
    c.near(z[2], 0.25, 1e-12, "z23");
    c.near(z[0] + z[1] - z[2], 1.25, 1e-12, "facet value");
    c.expect(!c3_facet_check(z[0], z[1], z[2]).member, "trine must violate the c3 polytope");
    int words = 0;
    for (size_t a = 1; a <= 3; a++) {
        for (size_t b = 1; b <= 3; b++) {
            for (size_t d = 1; d <= 3; d++) {
                Word w{a, b, d};
                Complex delta = bargmann_invariant(trine, w);
                c.expect(std::abs(delta.imag()) <= 1e-10, "Im delta " + w.str() + " = " + fmt(delta.imag()));
                c.expect(delta.real() >= -1e-10, "Re delta " + w.str() + " = " + fmt(delta.real()));
                words++;
            }
        }
    }
    c.note("facet value 5/4, non-member, " + std::to_string(words) + " third-order invariants real nonnegative");
}

void quartet_check(Check &c) {
    auto q = fixture("c4_quartet").states;
    for (size_t i = 1; i <= 4; i++) {
        c.near(bargmann_invariant(q, Word{i, i}).real(), 0.5, 1e-12, "purity " + std::to_string(i));
        for (size_t j = i + 1; j <= 4; j++) {
            c.near(bargmann_invariant(q, Word{i, j}).real(), 0.25, 1e-12, "overlap " + Word{i, j}.str());
        }
    }
    c.near(std::abs(bargmann_invariant(q, Word{1, 2, 3}) - Complex(0.125)), 0, 1e-12, "delta123");
    for (Word w : {Word{1, 2, 4}, Word{1, 3, 4}, Word{2, 3, 4}}) {
        c.near(std::abs(bargmann_invariant(q, w) - Complex(0.0625)), 0, 1e-12, "delta" + w.str());
    }
    c.near(std::abs(bargmann_invariant(q, Word{1, 2, 3, 4}) - Complex(0.03125)), 0, 1e-12, "delta1234");
    auto gram = gram_rank_criterion(q);
    c.expect(max_abs_diff(gram.gram, 0.25 * ComplexMatrix::identity(4)) <= 1e-12, "Gram = I/4");
    c.expect(gram.rank == 4, "Gram rank " + std::to_string(gram.rank));
    c.expect(set_coherence_decide(q).verdict == Verdict::set_coherent, "quartet verdict");
    c.note("all invariants match, Gram = I/4 with rank 4, set_coherent");
}

void vanishing_realizations(Check &c) {
    auto sigma = fixture("main_sigma_trio").states;
    auto prime = fixture("main_sigma_prime_trio").states;
    c.near(std::abs(bargmann_invariant(sigma, Word{1, 2, 3})), 0, 1e-12, "|delta123| sigma");
    c.near(std::abs(bargmann_invariant(prime, Word{1, 2, 3})), 0, 1e-12, "|delta123| sigma prime");
    c.expect(set_coherence_decide(sigma).verdict == Verdict::set_incoherent, "sigma trio must be set_incoherent");
    c.expect(set_coherence_decide(prime).verdict == Verdict::set_coherent, "sigma prime trio must be set_coherent");
    c.note("both vanish; sigma incoherent, sigma prime coherent");
}

void gap_property_suite(Check &c) {
    Rng rng(20260701);
    double worst_rel = 0;
    double min_gap = INFINITY;
    for (int trial = 0; trial < 10000; trial++) {
        size_t d = 2 + trial % 7;
        ComplexMatrix a = random_hermitian(d, rng);
        ComplexMatrix b = random_hermitian(d, rng);
        double gap = commutator_gap(a, b).gap;
        double oracle = 0.5 * eigen_commutator_norm_sq(a, b);
        min_gap = std::min(min_gap, gap);
        c.expect(gap >= -1e-10, "negative gap " + fmt(gap));
        double rel = std::abs(gap - oracle) / oracle;
        worst_rel = std::max(worst_rel, rel);
        c.expect(rel <= 1e-10, "norm identity off by " + fmt(rel) + " at d=" + std::to_string(d));
        for (double s : {0.5, 2.0, 10.0}) {
            for (double t : {0.5, 2.0, 10.0}) {
                double scaled = commutator_gap(s * a, t * b).gap;
                double want = s * s * t * t * gap;
                c.expect(std::abs(scaled - want) <= 1e-10 * std::abs(want), "scaling off at a=" + fmt(s) + " b=" + fmt(t));
            }
        }
    }
    c.note("1e4 pairs, min gap " + fmt(min_gap) + ", worst relative norm error " + fmt(worst_rel));
}

void qubit_suite(Check &c) {
    Rng rng(20260702);
    std::uniform_real_distribution<double> u(-1, 1);
    int commuting = 0;
    for (int trial = 0; trial < 10000; trial++) {
        auto ra = random_ball_point(rng);
        std::array<double, 3> rb;
        if (trial % 4 == 0) {
            double t = u(rng);
            rb = {t * ra[0], t * ra[1], t * ra[2]};
        } else {
            rb = random_ball_point(rng);
        }
        std::vector<PositiveOperator> s{qubit_from_bloch(ra), qubit_from_bloch(rb)};
        double d11 = bargmann_invariant(s, Word{1, 1}).real();
        double d22 = bargmann_invariant(s, Word{2, 2}).real();
        double d12 = bargmann_invariant(s, Word{1, 2}).real();
        std::vector<ComplexMatrix> aabb{s[0].matrix(), s[0].matrix(), s[1].matrix(), s[1].matrix()};
        std::vector<ComplexMatrix> abab{s[0].matrix(), s[1].matrix(), s[0].matrix(), s[1].matrix()};
        c.near(qubit_delta1122(d11, d22, d12), index_sum_trace(aabb).real(), 1e-10, "delta1122");
        c.near(qubit_delta1212(d11, d22, d12), index_sum_trace(abab).real(), 1e-10, "delta1212");
        bool by_qubit = qubit_criterion(d11, d22, d12).commutes;
        bool by_gap = commutator_gap(s[0], s[1]).commutes;
        c.expect(by_qubit == by_gap, "verdict mismatch at trial " + std::to_string(trial));
        commuting += by_gap ? 1 : 0;
    }
    double worst = 0;
    for (int trial = 0; trial < 10000; trial++) {
        std::array<Vec3, 4> r;
        std::vector<ComplexMatrix> ms;
        for (auto &v : r) {
            v = trial % 2 ? random_sphere_point(rng) : random_ball_point(rng);
            ms.push_back(qubit_from_bloch(v).matrix());
        }
        double err = std::abs(qubit_fourth_order(r[0], r[1], r[2], r[3]) - index_sum_trace(ms));
        worst = std::max(worst, err);
        c.expect(err <= 1e-10, "fourth-order mismatch " + fmt(err));
    }
    c.note("1e4 pairs (" + std::to_string(commuting) + " commuting), 1e4 quadruples, worst fourth-order error " + fmt(worst));
}

void imaginarity_suite(Check &c) {
    Rng rng(20260703);
    double min_slack = INFINITY;
    for (int trial = 0; trial < 1000; trial++) {
        size_t d = 2 + trial % 4;
        auto a = random_state(d, Ensemble::ginibre_mixed, rng);
        auto b = random_state(d, Ensemble::ginibre_mixed, rng);
        auto e = random_state(d, Ensemble::ginibre_mixed, rng);
        auto w = imaginarity_witness(a, b, e);
        min_slack = std::min(min_slack, w.rhs - w.lhs);
        c.expect(w.rhs - w.lhs >= -1e-10, "bound violated by " + fmt(w.lhs - w.rhs));
    }
    for (int trial = 0; trial < 200; trial++) {
        auto s = commuting_set(2 + trial % 4, 3, rng);
        auto w = imaginarity_witness(s[0], s[1], s[2]);
        c.expect(w.lhs <= 1e-12, "commuting triple lhs " + fmt(w.lhs));
    }
    c.note("1e3 Ginibre triples, min slack " + fmt(min_slack) + "; commuting triples lhs 0");
}

void estimator_suite(Check &c) {
    auto mub = fixture("mub_trio").states;
    Word w{1, 2, 3};
    auto big = estimate_invariant(mub, w, {1000000, 2026});
    c.near(big.estimate.real(), 0.25, 5e-3, "Re estimate");
    c.near(big.estimate.imag(), 0.25, 5e-3, "Im estimate");

    const uint64_t shots = 10000;
    const int seeds = 200;
    std::vector<Complex> xs;
    Complex mean = 0;
    for (int s = 0; s < seeds; s++) {
        xs.push_back(estimate_invariant(mub, w, {shots, static_cast<uint64_t>(s)}).estimate);
        mean += xs.back();
    }
    mean /= static_cast<double>(seeds);
    double var_re = 0, var_im = 0;
    for (auto x : xs) {
        var_re += std::pow(x.real() - mean.real(), 2);
        var_im += std::pow(x.imag() - mean.imag(), 2);
    }
    double sd_re = std::sqrt(var_re / (seeds - 1));
    double sd_im = std::sqrt(var_im / (seeds - 1));
    double predicted = std::sqrt((1 - 0.25 * 0.25) / static_cast<double>(shots));
    for (double sd : {sd_re, sd_im}) {
        double ratio = sd / predicted;
        c.expect(ratio >= 1 / 1.5 && ratio <= 1.5, "spread ratio " + fmt(ratio));
    }
    c.note(
        "1e6 shots -> (" + fmt(big.estimate.real()) + ", " + fmt(big.estimate.imag()) + "); spread ratios " +
        fmt(sd_re / predicted) + ", " + fmt(sd_im / predicted));
}

void paper_check_and_cli(Check &c) {
    auto report = paper_check();
    c.expect(report.passed, "paper_check failed");
    c.expect(report.max_abs_error < 1e-12, "max deviation " + fmt(report.max_abs_error));

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("bargmann_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto run = [&](std::vector<std::string> args) {
        args.insert(args.begin(), "bargmann");
        std::ostringstream out, err;
        return cli::run(args, out, err);
    };
    c.expect(run({"paper-check", "--out", (dir / "check.json").string()}) == 0, "paper-check exit code");

    int invocations = 1;
    for (const auto &name : fixture_names()) {
        std::string file = (dir / (name + ".json")).string();
        c.expect(run({"fixture", name, "--out", file}) == 0, "write fixture " + name);
        Fixture f = fixture(name);
        int want = 0;
        for (const auto &e : f.expected) {
            if (e.quantity == "set_coherent") {
                want = e.value == 1 ? 1 : 0;
            }
        }
        c.expect(run({"coherence", file}) == want, "coherence exit code on " + name);
        c.expect(run({"invariant", file, "--word", "1,1"}) == 0, "invariant exit code on " + name);
        c.expect(run({"invariant", file, "--word", "1,9"}) == 2, "bad index exit code on " + name);
        c.expect(run({"estimate", file, "--word", "1,2", "--shots", "0"}) == 2, "zero shots exit code on " + name);
        invocations += 5;
    }
    std::string trine = (dir / "trine.json").string();
    std::string mub = (dir / "mub_trio.json").string();
    c.expect(run({"facets", trine}) == 1, "facets on trine");
    c.expect(run({"facets", mub}) == 0, "facets on mub_trio");
    c.expect(run({"imaginarity", mub}) == 1, "imaginarity on mub_trio");
    c.expect(run({"gram", (dir / "c4_quartet.json").string()}) == 1, "gram on c4_quartet");
    c.expect(run({"qubit-check", (dir / "trine.json").string()}) == 1, "qubit-check on trine");
    std::ofstream(dir / "broken.json") << "{\"dimension\": 2, \"states\": [";
    c.expect(run({"coherence", (dir / "broken.json").string()}) == 2, "malformed JSON exit code");
    invocations += 6;
    fs::remove_all(dir);
    c.note(
        std::to_string(report.rows.size()) + " quantities, max deviation " + fmt(report.max_abs_error) + "; " +
        std::to_string(invocations) + " CLI exit codes as expected");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check &)>>> criteria{
        {"noncommuting C^4 pair gap", c4_pair_gap},
        {"C^4 pairs share all 2- and 3-letter invariants", c4_pair_matching},
        {"mub trio invariant and embedded Gram", mub_trio_check},
        {"trine overlaps and facet", trine_check},
        {"C^4 rank-2 quartet", quartet_check},
        {"vanishing third-order realizations", vanishing_realizations},
        {"gap property suite", gap_property_suite},
        {"qubit suite", qubit_suite},
        {"imaginarity bound", imaginarity_suite},
        {"estimator", estimator_suite},
        {"paper-check and CLI exit codes", paper_check_and_cli},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(check);
        } catch (const std::exception &e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (check.ok() ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << " ("
                  << fmt(seconds) << " s): " << check.detail() << "\n";
        failed += check.ok() ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all " + std::to_string(criteria.size()) + " criteria passed"
                              : std::to_string(failed) + " criteria failed")
              << "\n";
    return failed == 0 ? 0 : 1;
}
