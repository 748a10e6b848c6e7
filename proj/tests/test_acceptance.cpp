// Copyright 2026 The gmmvqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// End-to-end acceptance suite. Each test case covers one release criterion
// and prints a single [criterion k] PASS/FAIL line, so the ctest log doubles
// as the acceptance report. All randomness is seeded; the statistical
// margins were sized so the frozen seeds clear them by orders of magnitude.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gmmvqc/ansatz.hpp"
#include "gmmvqc/config.hpp"
#include "gmmvqc/gradient.hpp"
#include "gmmvqc/init_strategy.hpp"
#include "gmmvqc/observables.hpp"
#include "gmmvqc/pauli.hpp"
#include "gmmvqc/rng.hpp"
#include "gmmvqc/scan.hpp"
#include "gmmvqc/statevector.hpp"
#include "gmmvqc/theory.hpp"
#include "gmmvqc/train.hpp"
#include "gmmvqc/verify.hpp"

#include "oracles.hpp"

using namespace gmmvqc;

namespace {

__attribute__((format(printf, 1, 2))) std::string fmt(const char* f, ...) {
  char buf[256];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return buf;
}

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[criterion %d] %s %s\n", criterion, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
}

// Criteria 5 and 6 share one Monte-Carlo run: 10 qubits, 4 blocks, the
// position-keyed table strategy aimed at a single random global word.
struct GlobalWordRun {
  CircuitSpec spec;
  Observable obs;
  McGradStats stats;
};

const GlobalWordRun& table1_global_word_l4() {
  static const GlobalWordRun run = [] {
    CircuitSpec spec = build_circuit_spec(10, 4, "chain", GateOrder::RX_RY);
    Observable obs = gen_random_global_ensemble(10, 1, 0, mix_seed(901, 10));
    const InitStrategy st = build_strategy(StrategyKind::Table1, spec, obs, 0);
    McGradStats stats = mc_grad_stats(spec, obs, st, 500, mix_seed(901, 11),
                                      GradEngine::Adjoint, 1);
    return GlobalWordRun{std::move(spec), std::move(obs), std::move(stats)};
  }();
  return run;
}

}  // namespace

TEST_CASE("criterion 1: conjugation table is exact", "[acceptance]") {
  const CheckResult r = check_cz_table(cz_table());
  bool trace_ok = true;
  for (int ia = 0; ia < 4; ++ia) {
    for (int ib = 0; ib < 4; ++ib) {
      const Pauli a = static_cast<Pauli>(ia);
      const Pauli b = static_cast<Pauli>(ib);
      const CzEntry& e = cz_table()[static_cast<std::size_t>(
          cz_table_index(a, b))];
      const oracle::CzConjugation via_trace = oracle::cz_conjugate_oracle(a, b);
      trace_ok = trace_ok && via_trace.a == e.a && via_trace.b == e.b &&
                 via_trace.sign == e.sign;
    }
  }
  const bool pass = r.passed && trace_ok;
  report(1, pass,
         fmt("entangler conjugation table matches dense conjugation and an "
             "independent trace decomposition on all 16 pairs (max err %.3g)",
             r.max_abs_err));
  REQUIRE(r.passed);
  REQUIRE(trace_ok);
}

TEST_CASE("criterion 2: per-gate averaging identities", "[acceptance]") {
  const std::vector<CheckResult> results = check_lemma_identities(7, 50);
  double max_err = 0.0;
  bool all = !results.empty();
  for (const CheckResult& r : results) {
    max_err = std::max(max_err, r.max_abs_err);
    all = all && r.passed;
  }
  report(2, all,
         fmt("%zu averaging identities hold to %.3g (tol 1e-8; 3 variances x "
             "50 randomized trials each)",
             results.size(), max_err));
  REQUIRE(results.size() == 30);
  for (const CheckResult& r : results) {
    INFO(r.name << " err " << r.max_abs_err);
    REQUIRE(r.passed);
  }
}

TEST_CASE("criterion 3: moment coefficients and their lower bounds",
          "[acceptance]") {
  const CheckResult r = check_moment_coeffs();
  report(3, r.passed,
         fmt("closed-form moment coefficients match quadrature for all three "
             "families on 10 variances, polynomial bounds hold (max err %.3g)",
             r.max_abs_err));
  REQUIRE(r.passed);
}

TEST_CASE("criterion 4: gradient engines agree on random instances",
          "[acceptance]") {
  static const GateOrder orders[3] = {GateOrder::RX_RY, GateOrder::RY_RX,
                                      GateOrder::RX_RY_RX};
  double err_adjoint = 0.0;
  double err_fd = 0.0;
  for (int t = 0; t < 20; ++t) {
    std::mt19937_64 rng = make_stream(4242, static_cast<unsigned>(t));
    const int n = 2 + static_cast<int>(rng() % 5);       // 2..6 qubits
    const int blocks = 1 + static_cast<int>(rng() % 4);  // 1..4 blocks
    const GateOrder order = orders[rng() % 3];
    const std::string entangler = (rng() & 1) ? "chain" : "ring";
    const CircuitSpec spec = build_circuit_spec(n, blocks, entangler, order);
    const Observable obs = gmmvqc::detail::random_small_observable(n, rng);
    const ParamMatrix params =
        gmmvqc::detail::random_uniform_params(spec, rng);

    const GradReport shift =
        gradient(spec, obs, params, GradEngine::ParameterShift);
    const GradReport adjoint = gradient(spec, obs, params, GradEngine::Adjoint);
    const GradReport fd =
        gradient(spec, obs, params, GradEngine::FiniteDifference);
    err_adjoint = std::max(err_adjoint, std::abs(shift.cost - adjoint.cost));
    for (std::size_t k = 0; k < shift.grad.size(); ++k) {
      err_adjoint =
          std::max(err_adjoint, std::abs(shift.grad[k] - adjoint.grad[k]));
      err_fd = std::max(err_fd, std::abs(shift.grad[k] - fd.grad[k]));
    }
  }
  const bool pass = err_adjoint <= 1e-10 && err_fd <= 1e-6;
  report(4, pass,
         fmt("20 random circuits up to 6 qubits and 4 blocks: shift vs "
             "adjoint %.3g (tol 1e-10), shift vs finite diff %.3g (tol 1e-6)",
             err_adjoint, err_fd));
  REQUIRE(err_adjoint <= 1e-10);
  REQUIRE(err_fd <= 1e-6);
}

TEST_CASE("criterion 5: gradient components have zero mean", "[acceptance]") {
  const McGradStats& s = table1_global_word_l4().stats;
  std::mt19937_64 probe = make_stream(905, 0);
  std::set<std::size_t> picked;
  while (picked.size() < 32) {
    picked.insert(probe() % s.component_mean.size());
  }
  double worst = 0.0;
  for (std::size_t k : picked) {
    worst = std::max(worst, std::abs(s.component_mean[k]) /
                                s.component_stderr[k]);
  }
  const bool pass = worst <= 4.0;
  report(5, pass,
         fmt("32 probed gradient components are consistent with zero mean "
             "over 500 draws (worst |mean|/stderr %.2f, limit 4)",
             worst));
  REQUIRE(worst <= 4.0);
}

TEST_CASE("criterion 6: single-term gradient-norm lower bound",
          "[acceptance]") {
  const GlobalWordRun& l4 = table1_global_word_l4();
  const McGradStats& s4 = l4.stats;

  const CircuitSpec spec1 =
      build_circuit_spec(10, 1, "chain", GateOrder::RX_RY);
  const InitStrategy st1 =
      build_strategy(StrategyKind::Table1, spec1, l4.obs, 0);
  const McGradStats s1 = mc_grad_stats(spec1, l4.obs, st1, 500,
                                       mix_seed(901, 12),
                                       GradEngine::Adjoint, 1);
  const double b4 = bound_theorem1(4);
  const double b1 = bound_theorem1(1);
  const bool ok4 = s4.mean_norm_sq >= b4 - 3.0 * s4.stderr_norm_sq;
  const bool ok1 = s1.mean_norm_sq >= b1 - 3.0 * s1.stderr_norm_sq;
  report(6, ok4 && ok1,
         fmt("measured mean squared norm clears the depth bound with 3-sigma "
             "slack: %.4f vs %.5f at 4 blocks, %.4f vs %.3f at 1 block",
             s4.mean_norm_sq, b4, s1.mean_norm_sq, b1));
  REQUIRE(ok4);
  REQUIRE(ok1);
}

TEST_CASE("criterion 7: plateau separation at 14 qubits", "[acceptance]") {
  const int n = 14;
  const CircuitSpec spec = build_circuit_spec(n, 8, "chain", GateOrder::RX_RY);
  const Observable obs(n, {ObsTerm{1.0, parse_pauli(std::string(n, 'X'), n)}});
  const StrategyKind kinds[3] = {StrategyKind::Table1,
                                 StrategyKind::GaussianBaseline,
                                 StrategyKind::Uniform};
  double mean[3];
  double se[3];
  for (int i = 0; i < 3; ++i) {
    const InitStrategy st = build_strategy(kinds[i], spec, obs, 0);
    const McGradStats s =
        mc_grad_stats(spec, obs, st, 30,
                      mix_seed(902, 20 + static_cast<std::uint64_t>(i)),
                      GradEngine::Adjoint, 1);
    mean[i] = s.mean_norm_sq;
    se[i] = s.stderr_norm_sq;
  }
  const double bound = bound_theorem1(8);
  const bool table_ok = mean[0] >= bound - 3.0 * se[0];
  const bool gauss_ok = mean[1] <= 1e-3;
  const bool unif_ok = mean[2] <= 0.1;
  const bool ratio_ok = mean[1] == 0.0 || mean[0] / mean[1] >= 100.0;
  report(7, table_ok && gauss_ok && unif_ok && ratio_ok,
         fmt("table strategy %.3f vs bound %.4f; gaussian baseline %.2e "
             "(<= 1e-3), uniform %.2e (<= 0.1), separation ratio %.1e",
             mean[0], bound, mean[1], mean[2], mean[0] / mean[1]));
  REQUIRE(table_ok);
  REQUIRE(gauss_ok);
  REQUIRE(unif_ok);
  REQUIRE(ratio_ok);
}

TEST_CASE("criterion 8: mixed-sign ensembles keep the bound", "[acceptance]") {
  bool all = true;
  std::string detail;
  for (int n : {5, 10}) {
    const Observable obs = gen_random_global_ensemble(
        n, 10, 10, mix_seed(903, static_cast<std::uint64_t>(n)));
    const CircuitSpec spec =
        build_circuit_spec(n, 2, "chain", GateOrder::RX_RY);
    const InitStrategy st = build_strategy(StrategyKind::Table2, spec, obs, 0);
    const McGradStats s = mc_grad_stats(
        spec, obs, st, 300, mix_seed(903, 100 + static_cast<std::uint64_t>(n)),
        GradEngine::Adjoint, 1);
    const double bound =
        bound_theorem2(count_equivalent_terms(obs, 0).m, 2);
    const bool ok = s.mean_norm_sq >= bound - 3.0 * s.stderr_norm_sq;
    all = all && ok;
    detail += fmt("n=%d mean %.3f vs %.4f; ", n, s.mean_norm_sq, bound);
    if (n == 10) {
      const InitStrategy gb =
          build_strategy(StrategyKind::GaussianBaseline, spec, obs, 0);
      const McGradStats g = mc_grad_stats(spec, obs, gb, 300,
                                          mix_seed(903, 200),
                                          GradEngine::Adjoint, 1);
      const bool flat = g.mean_norm_sq <= 0.1;
      all = all && flat;
      detail += fmt("gaussian baseline %.2e (<= 0.1)", g.mean_norm_sq);
      REQUIRE(flat);
    }
    REQUIRE(ok);
  }
  report(8, all, "20-term random ensembles, 300 draws: " + detail);
  REQUIRE(all);
}

TEST_CASE("criterion 9: multi-term bound against its worked value",
          "[acceptance]") {
  const Observable pair_obs(2, {ObsTerm{1.0, parse_pauli("ZZ", 2)},
                                ObsTerm{0.5, parse_pauli("ZI", 2)}});
  const double worked = bound_theorem3(pair_obs, 0, 2);
  const bool worked_ok = std::abs(worked - 0.71741) <= 1e-4;

  bool degenerate_ok = true;
  const Observable single(3, {ObsTerm{0.8, parse_pauli("XYZ", 3)}});
  for (int blocks : {1, 2, 5}) {
    degenerate_ok = degenerate_ok &&
                    bound_theorem3(single, 0, blocks) ==
                        bound_theorem2(1, blocks);
  }

  std::mt19937_64 rng = make_stream(906, 0);
  std::uniform_real_distribution<double> coeff(0.1, 1.5);
  bool dominates = true;
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int n_terms = 1 + static_cast<int>(rng() % 4);
    std::vector<ObsTerm> terms;
    for (int k = 0; k < n_terms; ++k) {
      std::vector<Pauli> word(static_cast<std::size_t>(n), Pauli::I);
      for (int q = 0; q < n; ++q) {
        word[static_cast<std::size_t>(q)] = static_cast<Pauli>(rng() % 4);
      }
      word[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n))] =
          static_cast<Pauli>(1 + rng() % 3);
      terms.push_back(ObsTerm{coeff(rng), PauliString{word, 1}});
    }
    const Observable obs(n, std::move(terms));
    const int chosen = static_cast<int>(
        rng() % static_cast<std::uint64_t>(obs.n_terms()));
    const int blocks = 1 + static_cast<int>(rng() % 4);
    const int m = count_equivalent_terms(obs, chosen).m;
    dominates = dominates &&
                bound_theorem3(obs, chosen, blocks) >=
                    bound_theorem2(m, blocks) - 1e-15;
  }
  const bool pass = worked_ok && degenerate_ok && dominates;
  report(9, pass,
         fmt("two-term bound %.6f within 1e-4 of 0.71741; single-term case "
             "collapses exactly; dominates the count-only bound on 50 random "
             "non-negative observables",
             worked));
  REQUIRE(worked_ok);
  REQUIRE(degenerate_ok);
  REQUIRE(dominates);
}

TEST_CASE("criterion 10: commuting closing layer has zero gradient",
          "[acceptance]") {
  double max_abs = 0.0;
  double max_mean = 0.0;
  double max_var = 0.0;
  bool detector_ok = true;
  int flagged_total = 0;
  for (int n : {3, 5, 8}) {
    const int blocks = 2;
    const CircuitSpec spec =
        build_circuit_spec(n, blocks, "chain", GateOrder::RX_RY);
    const Observable obs(
        n, {ObsTerm{1.0, PauliString{std::vector<Pauli>(
                              static_cast<std::size_t>(n), Pauli::Y),
                          1}}});
    const std::vector<std::pair<int, int>> flagged =
        detect_inactive(spec, obs);
    detector_ok = detector_ok && static_cast<int>(flagged.size()) == n;
    for (const auto& [layer, qubit] : flagged) {
      detector_ok = detector_ok && layer == 2 * blocks;
      (void)qubit;
    }
    flagged_total += static_cast<int>(flagged.size());

    const int points = 20;
    std::mt19937_64 rng = make_stream(907, static_cast<unsigned>(n));
    std::vector<std::vector<double>> samples(
        flagged.size(), std::vector<double>(points, 0.0));
    for (int p = 0; p < points; ++p) {
      const ParamMatrix params =
          gmmvqc::detail::random_uniform_params(spec, rng);
      const GradReport rep =
          gradient(spec, obs, params, GradEngine::ParameterShift);
      for (std::size_t f = 0; f < flagged.size(); ++f) {
        const int idx = param_index(spec, flagged[f].first, flagged[f].second);
        const double g = rep.grad[static_cast<std::size_t>(idx)];
        samples[f][static_cast<std::size_t>(p)] = g;
        max_abs = std::max(max_abs, std::abs(g));
      }
    }
    for (const std::vector<double>& comp : samples) {
      double mean = 0.0;
      for (double v : comp) mean += v;
      mean /= points;
      double var = 0.0;
      for (double v : comp) var += (v - mean) * (v - mean);
      var /= points;
      max_mean = std::max(max_mean, std::abs(mean));
      max_var = std::max(max_var, var);
    }
  }
  const bool pass = detector_ok && max_abs <= 1e-12 && max_mean <= 1e-12 &&
                    max_var <= 1e-24;
  report(10, pass,
         fmt("%d closing-layer rotations commuting with the observable stay "
             "silent at 20 random points each (max |grad| %.2e, mean %.2e, "
             "var %.2e)",
             flagged_total, max_abs, max_mean, max_var));
  REQUIRE(detector_ok);
  REQUIRE(max_abs <= 1e-12);
  REQUIRE(max_mean <= 1e-12);
  REQUIRE(max_var <= 1e-24);
}

TEST_CASE("criterion 11: training reaches the Ising ground state",
          "[acceptance]") {
  const Observable obs = gen_tfim(8);
  const double e0 = exact_ground_energy(obs);
  const CircuitSpec spec = build_circuit_spec(8, 8, "chain", GateOrder::RX_RY);
  // Term 7 is the first transverse-field term, a weight-one X word.
  const InitStrategy st = build_strategy(StrategyKind::Table1, spec, obs, 7);
  TrainOptions opt;
  opt.optimizer = Optimizer::Adam;
  opt.learning_rate = 0.01;
  opt.max_iters = 2000;
  opt.engine = GradEngine::Adjoint;
  int ok = 0;
  double worst_rel = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const TrainResult res = run_training(spec, obs, st, mix_seed(904, seed),
                                         opt);
    const double rel = std::abs(res.final_cost - e0) / std::abs(e0);
    worst_rel = std::max(worst_rel, rel);
    if (rel <= 0.10) ++ok;
  }
  const bool pass = ok >= 4;
  report(11, pass,
         fmt("8-qubit Ising chain, 8 blocks, 2000 iterations: %d/5 seeds "
             "finish within 10%% of the exact ground energy %.4f (worst "
             "relative gap %.4f)",
             ok, e0, worst_rel));
  REQUIRE(ok >= 4);
}

TEST_CASE("criterion 12: scans are reproducible across thread counts",
          "[acceptance]") {
  RunConfig cfg;
  cfg.n_blocks = 2;
  cfg.seed = 42;
  cfg.n_samples = 16;
  cfg.scan_qubits = {3, 5};
  cfg.scan_strategies = {"table1", "uniform"};
  cfg.observable.source = "tfim";

  const auto csv_for = [&cfg](int workers) {
    RunConfig c = cfg;
    c.workers = workers;
    std::ostringstream os;
    write_scan_csv(os, run_gradscan(c));
    return os.str();
  };
  const std::string serial = csv_for(1);
  const std::string threaded = csv_for(8);
  const bool pass = !serial.empty() && serial == threaded;
  report(12, pass,
         fmt("gradient scan output is byte-identical for 1 and 8 workers "
             "(%zu-byte csv, 2 qubit counts x 2 strategies)",
             serial.size()));
  REQUIRE_FALSE(serial.empty());
  REQUIRE(serial == threaded);
}
