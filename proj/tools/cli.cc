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

#include "cli.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bargmann/bargmann.h"

namespace bargmann::cli {

namespace {

StateSet load_states(const std::string &path) {
    std::stringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw ParseError("cannot open '" + path + "'");
        }
        buffer << in.rdbuf();
    }
    return parse_state_set(buffer.str());
}

void emit(const std::string &text, const std::string &out_path, std::ostream &out) {
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) {
        throw ArgumentError("cannot write '" + out_path + "'");
    }
    file << text;
}

void emit(const nlohmann::json &report, const std::string &out_path, std::ostream &out) {
    emit(report.dump(2) + "\n", out_path, out);
}

Word checked_word(const std::string &text, const StateSet &set) {
    Word w = parse_word(text);
    if (w.max_letter() > set.states.size()) {
        throw ArgumentError(
            "word " + w.str() + " refers to state " + std::to_string(w.max_letter()) + " but the file holds " +
            std::to_string(set.states.size()) + " states");
    }
    return w;
}

BlochConvention default_convention(size_t dim, const std::string &flag) {
    if (!flag.empty()) {
        return parse_bloch_convention(flag);
    }
    return dim == 2 ? BlochConvention::pauli : BlochConvention::orthonormal;
}

struct Options {
    std::string file;
    std::string out;
    std::string word = "1,2,3";
    double tol = kDefaultCommutationTol;
    double gap_tol = kDefaultGapTol;
    double facet_tol = kDefaultFacetTol;
    size_t reference = 0;
    uint64_t shots = 1000;
    uint64_t seed = 0;
    bool real_only = false;
    std::string pair = "1,2";
    std::vector<std::string> fixtures;
    size_t dim = 2;
    size_t count = 2;
    std::string ensemble = "ginibre_mixed";
    std::string convention;
    size_t embed_dim = 0;
    std::string scenario = "winc2";
    std::string fixture_name;
};

int cmd_invariant(const Options &o, std::ostream &out) {
    StateSet set = load_states(o.file);
    Word w = checked_word(o.word, set);
    Complex delta = bargmann_invariant(set.states, w);
    emit(nlohmann::json{{"word", w.str()}, {"re", delta.real()}, {"im", delta.imag()}}, o.out, out);
    return kNegative;
}

int cmd_scenario(const Options &o, std::ostream &out) {
    StateSet set = load_states(o.file);
    BargmannScenario scenario = scenario_catalog(o.scenario);
    nlohmann::json values = nlohmann::json::array();
    for (const auto &[w, delta] : evaluate_scenario(set.states, scenario)) {
        values.push_back({{"word", w.str()}, {"re", delta.real()}, {"im", delta.imag()}});
    }
    emit(nlohmann::json{{"scenario", scenario.name()}, {"invariants", std::move(values)}}, o.out, out);
    return kNegative;
}

int cmd_coherence(const Options &o, std::ostream &out) {
    StateSet set = load_states(o.file);
    CoherenceReport report = o.reference == 0 ? set_coherence_decide(set.states, o.tol)
                                              : reduced_set_coherence(set.states, o.reference, o.tol, o.gap_tol);
    emit(to_json(report), o.out, out);
    return report.verdict == Verdict::set_coherent ? kPositive : kNegative;
}

int cmd_estimate(const Options &o, std::ostream &out) {
    StateSet set = load_states(o.file);
    Word w = checked_word(o.word, set);
    EstimatorConfig config{
        o.shots, o.seed, o.real_only ? EstimatorSettings::real_only : EstimatorSettings::real_and_imag};
    emit(to_json(estimate_invariant(set.states, w, config)), o.out, out);
    return kNegative;
}

int cmd_estimate_gap(const Options &o, std::ostream &out) {
    StateSet set = load_states(o.file);
    Word pair = checked_word(o.pair, set);
    if (pair.size() != 2) {
        throw ArgumentError("--pair expects two labels, e.g. 1,2");
    }
    EstimatorConfig config{o.shots, o.seed, EstimatorSettings::real_only};
    GapEstimate g = estimate_gap(set.states[pair.letters()[0] - 1], set.states[pair.letters()[1] - 1], config);
    nlohmann::json report = to_json(g);
    report["pair"] = pair.str();
    emit(report, o.out, out);
    return kNegative;
}

int cmd_paper_check(const Options &o, std::ostream &out, std::ostream &err) {
    std::vector<std::string> names = o.fixtures.empty() ? fixture_names() : o.fixtures;
    PaperCheckReport report = paper_check(std::span<const std::string>(names));
    for (const auto &w : report.warnings) {
        err << "warning: " << w << "\n";
    }
    emit(to_json(report), o.out, out);
    err << (report.passed ? "PASS" : "FAIL") << ": " << report.rows.size() << " quantities, max abs error "
        << report.max_abs_error << "\n";
    return report.passed ? kNegative : kPositive;
}

int cmd_random(const Options &o, std::ostream &out) {
    if (o.dim == 0 || o.count == 0) {
        throw ArgumentError("--dim and --count must be positive");
    }
    Rng rng(o.seed);
    std::vector<PositiveOperator> states;
    if (o.ensemble == "commuting") {
        states = commuting_set(o.dim, o.count, rng);
    } else {
        Ensemble ensemble = parse_ensemble(o.ensemble);
        for (size_t k = 0; k < o.count; k++) {
            states.push_back(random_state(o.dim, ensemble, rng));
        }
    }
    emit(write_state_set(make_state_set(std::move(states))), o.out, out);
    return kNegative;
}

int cmd_fixture(const Options &o, std::ostream &out) {
    Fixture f = fixture(o.fixture_name);
    emit(write_state_set(make_state_set(f.states)), o.out, out);
    return kNegative;
}

int cmd_qubit_check(const Options &o, std::ostream &out, std::ostream &err) {
    StateSet set = load_states(o.file);
    if (set.dimension != 2) {
        throw ArgumentError("qubit-check needs dimension 2, got " + std::to_string(set.dimension));
    }
    auto overlap = [&](size_t i, size_t j) {
        return bargmann_invariant(set.states, Word{i + 1, j + 1}).real();
    };
    nlohmann::json pairs = nlohmann::json::array();
    bool all_commute = true;
    for (size_t l = 0; l < set.states.size(); l++) {
        for (size_t k = l + 1; k < set.states.size(); k++) {
            double d11 = overlap(l, l);
            double d22 = overlap(k, k);
            double d12 = overlap(l, k);
            for (const auto &w : qubit_overlap_range_warnings(d11, d22, d12)) {
                err << "warning: pair (" << l + 1 << "," << k + 1 << "): " << w << "\n";
            }
            QubitCriterionResult r = qubit_criterion(d11, d22, d12, o.tol);
            all_commute = all_commute && r.commutes;
            nlohmann::json entry = to_json(r);
            entry["indices"] = {l + 1, k + 1};
            entry["d11"] = d11;
            entry["d22"] = d22;
            entry["d12"] = d12;
            entry["delta_1122"] = qubit_delta1122(d11, d22, d12);
            entry["delta_1212"] = qubit_delta1212(d11, d22, d12);
            pairs.push_back(std::move(entry));
        }
    }
    Verdict verdict = all_commute ? Verdict::set_incoherent : Verdict::set_coherent;
    emit(nlohmann::json{{"pairs", std::move(pairs)}, {"verdict", to_string(verdict)}}, o.out, out);
    return all_commute ? kNegative : kPositive;
}

int cmd_gram(const Options &o, std::ostream &out) {
    StateSet set = load_states(o.file);
    std::vector<PositiveOperator> states = set.states;
    if (o.embed_dim != 0) {
        for (auto &s : states) {
            s = embed(s, o.embed_dim);
        }
    }
    if (states.empty()) {
        throw ArgumentError("gram needs at least one state");
    }
    BlochConvention convention = default_convention(states.front().dim(), o.convention);
    GramRankResult result = gram_rank_criterion(states, o.tol, convention);
    nlohmann::json report = to_json(result);
    report["convention"] = to_string(convention);
    emit(report, o.out, out);
    return result.condition_holds ? kNegative : kPositive;
}

int cmd_facets(const Options &o, std::ostream &out) {
    StateSet set = load_states(o.file);
    for (const auto &s : set.states) {
        if (!s.normalized()) {
            throw PreconditionError("facets: polytope membership is defined for normalized states only");
        }
    }
    auto z = c3_overlaps(set.states);
    FacetReport report = c3_facet_check(z[0], z[1], z[2], o.facet_tol);
    emit(to_json(report), o.out, out);
    return report.member ? kNegative : kPositive;
}

int cmd_imaginarity(const Options &o, std::ostream &out) {
    StateSet set = load_states(o.file);
    Word w = checked_word(o.word, set);
    if (w.size() != 3) {
        throw ArgumentError("imaginarity needs a 3-letter word, got " + w.str());
    }
    const auto &L = w.letters();
    ImaginarityWitness witness =
        imaginarity_witness(set.states[L[0] - 1], set.states[L[1] - 1], set.states[L[2] - 1]);
    bool detected = std::abs(witness.im_delta) > o.tol;
    nlohmann::json report = to_json(witness);
    report["word"] = w.str();
    report["imaginarity_detected"] = detected;
    emit(report, o.out, out);
    return detected ? kPositive : kNegative;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Bargmann invariants and set-coherence tests for finite collections of states", "bargmann"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto add_file = [&](CLI::App *sub) {
        sub->add_option("file", o.file, "State-set JSON document ('-' for stdin)")->required();
    };
    auto add_out = [&](CLI::App *sub) {
        sub->add_option("--out", o.out, "Write the report to this path instead of stdout");
    };

    auto *invariant = app.add_subcommand("invariant", "Evaluate tr(rho_l1 ... rho_lm) for one word");
    add_file(invariant);
    invariant->add_option("--word", o.word, "Comma-separated 1-based labels")->required();
    add_out(invariant);
    invariant->callback([&] { action = [&] { return cmd_invariant(o, out); }; });

    auto *scenario = app.add_subcommand("scenario", "Evaluate every word of a named scenario");
    add_file(scenario);
    scenario->add_option("--name", o.scenario, "winc2, c3, w3 or w23")->capture_default_str();
    add_out(scenario);
    scenario->callback([&] { action = [&] { return cmd_scenario(o, out); }; });

    auto *coherence = app.add_subcommand("coherence", "Pairwise commutativity via tr(A^2B^2) = tr(ABAB)");
    add_file(coherence);
    coherence->add_option("--tol", o.tol, "Threshold on each commutator gap")->capture_default_str();
    coherence->add_option("--reference", o.reference, "1-based label of a non-degenerate reference state");
    coherence->add_option("--gap-tol", o.gap_tol, "Eigenvalue gap below which the reference counts as degenerate")
        ->capture_default_str();
    add_out(coherence);
    coherence->callback([&] { action = [&] { return cmd_coherence(o, out); }; });

    auto *estimate = app.add_subcommand("estimate", "Shot-sampled cycle-test estimate of one invariant");
    add_file(estimate);
    estimate->add_option("--word", o.word, "Comma-separated 1-based labels")->required();
    estimate->add_option("--shots", o.shots, "Shots per measurement setting")->capture_default_str();
    estimate->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    estimate->add_flag("--real-only", o.real_only, "Skip the imaginary-part setting");
    add_out(estimate);
    estimate->callback([&] { action = [&] { return cmd_estimate(o, out); }; });

    auto *estimate_gap = app.add_subcommand("estimate-gap", "Shot-sampled estimate of a pair's commutator gap");
    add_file(estimate_gap);
    estimate_gap->add_option("--pair", o.pair, "Two 1-based labels")->capture_default_str();
    estimate_gap->add_option("--shots", o.shots, "Shots per invariant")->capture_default_str();
    estimate_gap->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    add_out(estimate_gap);
    estimate_gap->callback([&] { action = [&] { return cmd_estimate_gap(o, out); }; });

    auto *check = app.add_subcommand("paper-check", "Recompute every published worked-example value");
    check->add_option("--fixture", o.fixtures, "Restrict to these fixtures (repeatable)");
    add_out(check);
    check->callback([&] { action = [&] { return cmd_paper_check(o, out, err); }; });

    auto *random = app.add_subcommand("random", "Write a random state-set document");
    random->add_option("--dim", o.dim, "Hilbert-space dimension")->capture_default_str();
    random->add_option("--count", o.count, "Number of states")->capture_default_str();
    random->add_option("--ensemble", o.ensemble, "ginibre_mixed, haar_pure, random_diagonal or commuting")
        ->capture_default_str();
    random->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    add_out(random);
    random->callback([&] { action = [&] { return cmd_random(o, out); }; });

    auto *fixture_cmd = app.add_subcommand("fixture", "Write a built-in worked example as a state-set document");
    fixture_cmd->add_option("name", o.fixture_name, "Fixture name")->required();
    add_out(fixture_cmd);
    fixture_cmd->callback([&] { action = [&] { return cmd_fixture(o, out); }; });

    auto *qubit = app.add_subcommand("qubit-check", "Qubit pair criterion on purities and overlaps");
    add_file(qubit);
    qubit->add_option("--tol", o.tol, "Threshold on the residual")->capture_default_str();
    add_out(qubit);
    qubit->callback([&] { action = [&] { return cmd_qubit_check(o, out, err); }; });

    auto *gram = app.add_subcommand("gram", "Rank of the Gram matrix of Bloch vectors");
    add_file(gram);
    gram->add_option("--tol", o.tol, "Relative eigenvalue threshold for the numerical rank")->capture_default_str();
    gram->add_option("--convention", o.convention, "pauli or orthonormal (default: pauli for qubits)");
    gram->add_option("--embed", o.embed_dim, "Embed the states into this larger dimension first");
    add_out(gram);
    gram->callback([&] { action = [&] { return cmd_gram(o, out); }; });

    auto *facets = app.add_subcommand("facets", "Three-cycle event-graph polytope membership of the overlaps");
    add_file(facets);
    facets->add_option("--tol", o.facet_tol, "Slack tolerance")->capture_default_str();
    add_out(facets);
    facets->callback([&] { action = [&] { return cmd_facets(o, out); }; });

    auto *imaginarity = app.add_subcommand("imaginarity", "Imaginary part of a third-order invariant and its bound");
    add_file(imaginarity);
    imaginarity->add_option("--word", o.word, "Three 1-based labels l,k,s")->capture_default_str();
    imaginarity->add_option("--tol", o.tol, "Threshold on |Im Delta| for detection")->capture_default_str();
    add_out(imaginarity);
    imaginarity->callback([&] { action = [&] { return cmd_imaginarity(o, out); }; });

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, err, err);
        return kError;
    }

    try {
        return action();
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
    }
    return kError;
}

}  // namespace bargmann::cli
