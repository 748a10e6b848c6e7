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

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmmvqc/config.hpp"
#include "gmmvqc/observables.hpp"
#include "gmmvqc/scan.hpp"
#include "gmmvqc/statevector.hpp"
#include "gmmvqc/theory.hpp"
#include "gmmvqc/train.hpp"
#include "gmmvqc/verify.hpp"

namespace {

// Options shared by the run-style subcommands. Each field only overrides the
// config file when the flag was actually given on the command line.
struct CommonOpts {
  std::string config_path;
  int n_qubits = 0;
  int n_blocks = 0;
  std::string entangler;
  std::string gate_order;
  std::string strategy;
  int term = 0;
  double sigma2_override = 0.0;
  std::uint64_t seed = 0;
  int n_samples = 0;
  int workers = 0;
  std::string engine;
  std::string out;
  std::string obs_source;
  std::string obs_path;
  int n_plus = 0;
  int n_minus = 0;
};

void register_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "JSON run configuration file");
  cmd->add_option("--n-qubits", o.n_qubits, "number of qubits");
  cmd->add_option("--blocks", o.n_blocks, "number of circuit blocks");
  cmd->add_option("--entangler", o.entangler, "chain, ring, or none");
  cmd->add_option("--gate-order", o.gate_order,
                  "rx_ry, ry_rx, or rx_ry_rx rotation layers per block");
  cmd->add_option("--strategy", o.strategy,
                  "table1, table2, table3, uniform, gaussian_baseline, or "
                  "reduced_domain");
  cmd->add_option("--term", o.term,
                  "observable term index the initialization targets "
                  "(-1: derive from the seed)");
  cmd->add_option("--sigma2", o.sigma2_override,
                  "override the mixture component variance");
  cmd->add_option("--seed", o.seed, "master seed for the run");
  cmd->add_option("--samples", o.n_samples, "Monte Carlo sample count");
  cmd->add_option("--workers", o.workers, "worker thread count");
  cmd->add_option("--engine", o.engine, "auto, shift, or adjoint");
  cmd->add_option("--out", o.out, "output file (default: stdout)");
  cmd->add_option("--obs", o.obs_source,
                  "observable source: tfim, random_global, or file");
  cmd->add_option("--obs-file", o.obs_path, "observable JSON file path");
  cmd->add_option("--n-plus", o.n_plus,
                  "positive-coefficient terms for random_global");
  cmd->add_option("--n-minus", o.n_minus,
                  "negative-coefficient terms for random_global");
}

gmmvqc::RunConfig build_config(const CLI::App* cmd, const CommonOpts& o) {
  gmmvqc::RunConfig cfg;
  if (cmd->count("--config") > 0) cfg = gmmvqc::load_config(o.config_path);
  if (cmd->count("--n-qubits") > 0) cfg.n_qubits = o.n_qubits;
  if (cmd->count("--blocks") > 0) cfg.n_blocks = o.n_blocks;
  if (cmd->count("--entangler") > 0) cfg.entangler = o.entangler;
  if (cmd->count("--gate-order") > 0) cfg.gate_order = o.gate_order;
  if (cmd->count("--strategy") > 0) cfg.strategy.kind = o.strategy;
  if (cmd->count("--term") > 0) cfg.strategy.term = o.term;
  if (cmd->count("--sigma2") > 0) cfg.strategy.sigma2_override = o.sigma2_override;
  if (cmd->count("--seed") > 0) cfg.seed = o.seed;
  if (cmd->count("--samples") > 0) cfg.n_samples = o.n_samples;
  if (cmd->count("--workers") > 0) cfg.workers = o.workers;
  if (cmd->count("--engine") > 0) cfg.engine = o.engine;
  if (cmd->count("--out") > 0) cfg.out = o.out;
  if (cmd->count("--obs") > 0) cfg.observable.source = o.obs_source;
  if (cmd->count("--obs-file") > 0) {
    cfg.observable.path = o.obs_path;
    if (cmd->count("--obs") == 0) cfg.observable.source = "file";
  }
  if (cmd->count("--n-plus") > 0) cfg.observable.n_plus = o.n_plus;
  if (cmd->count("--n-minus") > 0) cfg.observable.n_minus = o.n_minus;
  return cfg;
}

int with_output(const std::string& path,
                const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) {
    writer(std::cout);
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open output file \"" << path << "\"\n";
    return 2;
  }
  writer(out);
  return 0;
}

int cmd_verify(std::uint64_t seed, int trials) {
  const std::vector<gmmvqc::CheckResult> results =
      gmmvqc::run_verification(seed, trials);
  int failed = 0;
  for (const gmmvqc::CheckResult& r : results) {
    if (!r.passed) ++failed;
    std::printf("[%s] %-44s max_err %.3e  tol %.0e  (%s)\n",
                r.passed ? " ok " : "FAIL", r.name.c_str(), r.max_abs_err,
                r.tolerance, r.detail.c_str());
  }
  if (failed == 0) {
    std::printf("all %zu checks passed\n", results.size());
    return 0;
  }
  std::printf("%d of %zu checks FAILED\n", failed, results.size());
  return 1;
}

int cmd_gradscan(const CLI::App* cmd, const CommonOpts& common,
                 const std::vector<int>& qubits,
                 const std::vector<std::string>& strategies) {
  gmmvqc::RunConfig cfg = build_config(cmd, common);
  if (cmd->count("--qubits") > 0) cfg.scan_qubits = qubits;
  if (cmd->count("--strategies") > 0) cfg.scan_strategies = strategies;
  const std::vector<gmmvqc::ScanRow> rows = gmmvqc::run_gradscan(cfg);
  return with_output(cfg.out, [&rows](std::ostream& os) {
    gmmvqc::write_scan_csv(os, rows);
  });
}

int cmd_train(const CLI::App* cmd, const CommonOpts& common,
              const std::string& optimizer, double lr, int iters,
              bool print_ground) {
  gmmvqc::RunConfig cfg = build_config(cmd, common);
  if (cmd->count("--optimizer") > 0) cfg.optimizer = optimizer;
  if (cmd->count("--lr") > 0) cfg.learning_rate = lr;
  if (cmd->count("--iters") > 0) cfg.max_iters = iters;
  gmmvqc::validate_config(cfg);

  const gmmvqc::CircuitSpec spec = gmmvqc::make_circuit(cfg, cfg.n_qubits);
  const gmmvqc::Observable obs = gmmvqc::make_observable(cfg, cfg.n_qubits);
  const int chosen = gmmvqc::resolve_chosen_term(cfg, obs, cfg.n_qubits);
  const gmmvqc::InitStrategy strategy =
      gmmvqc::make_strategy(cfg, spec, obs, chosen);

  gmmvqc::TrainOptions opt;
  opt.optimizer = gmmvqc::optimizer_from_name(cfg.optimizer);
  opt.learning_rate = cfg.learning_rate;
  opt.max_iters = cfg.max_iters;
  opt.engine = gmmvqc::resolve_engine(cfg, cfg.n_qubits);

  const gmmvqc::TrainResult result = gmmvqc::run_training(
      spec, obs, strategy,
      gmmvqc::mix_seed(cfg.seed, gmmvqc::seed_tag::kTrainInit), opt);

  std::fprintf(stderr,
               "strategy %s, %d qubits, %d blocks, %d iterations, "
               "final cost %.12g\n",
               strategy.name.c_str(), cfg.n_qubits, cfg.n_blocks,
               cfg.max_iters, result.final_cost);
  if (print_ground) {
    const double ground = gmmvqc::exact_ground_energy(obs);
    std::fprintf(stderr, "exact ground energy %.12g (gap %.3g)\n", ground,
                 result.final_cost - ground);
  }
  return with_output(cfg.out, [&result](std::ostream& os) {
    gmmvqc::write_training_csv(os, result.history);
  });
}

int cmd_bound(const CLI::App* cmd, const CommonOpts& common) {
  gmmvqc::RunConfig cfg = build_config(cmd, common);
  gmmvqc::validate_config(cfg);
  const gmmvqc::CircuitSpec spec = gmmvqc::make_circuit(cfg, cfg.n_qubits);
  const gmmvqc::Observable obs = gmmvqc::make_observable(cfg, cfg.n_qubits);
  const int chosen = gmmvqc::resolve_chosen_term(cfg, obs, cfg.n_qubits);
  const int L = cfg.n_blocks;

  const gmmvqc::StrategyKind kind =
      gmmvqc::strategy_from_name(cfg.strategy.kind);
  std::printf("strategy    %s\n", gmmvqc::strategy_name(kind).c_str());
  std::printf("n_qubits    %d\n", cfg.n_qubits);
  std::printf("n_blocks    %d\n", L);
  std::printf("chosen term %d (%s)\n", chosen,
              gmmvqc::to_string(obs.term(chosen).op).c_str());
  switch (kind) {
    case gmmvqc::StrategyKind::Table1:
      std::printf("bound       %.12g\n", gmmvqc::bound_theorem1(L));
      break;
    case gmmvqc::StrategyKind::Table2: {
      const gmmvqc::EquivalentTerms eq =
          gmmvqc::count_equivalent_terms(obs, chosen);
      std::printf("equivalent  %d\n", eq.m);
      std::printf("bound       %.12g\n", gmmvqc::bound_theorem2(eq.m, L));
      break;
    }
    case gmmvqc::StrategyKind::Table3:
      std::printf("bound       %.12g\n", gmmvqc::bound_theorem3(obs, chosen, L));
      break;
    default:
      std::printf("bound       (no analytic bound for this strategy)\n");
      break;
  }
  return 0;
}

int cmd_tfim_gen(int n_qubits, const std::string& out) {
  const gmmvqc::Observable obs = gmmvqc::gen_tfim(n_qubits);
  gmmvqc::save_observable_file(obs, out);
  std::fprintf(stderr, "wrote %d-qubit transverse-field Ising model (%d terms) to %s\n",
               n_qubits, obs.n_terms(), out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "statevector benchmark for mixture-initialized variational circuits"};
  app.require_subcommand(1);

  // verify
  CLI::App* verify = app.add_subcommand(
      "verify", "run the analytic self-check suite");
  std::uint64_t verify_seed = 7;
  int verify_trials = 50;
  verify->add_option("--seed", verify_seed, "seed for randomized trials");
  verify->add_option("--trials", verify_trials,
                     "randomized trials per identity");

  // gradscan
  CLI::App* gradscan = app.add_subcommand(
      "gradscan",
      "Monte Carlo squared-gradient-norm scan over qubit counts and "
      "initialization strategies (CSV)");
  CommonOpts scan_opts;
  register_common(gradscan, scan_opts);
  std::vector<int> scan_qubits;
  std::vector<std::string> scan_strategies;
  gradscan->add_option("--qubits", scan_qubits, "qubit counts to scan");
  gradscan->add_option("--strategies", scan_strategies,
                       "strategies to scan");

  // train
  CLI::App* train = app.add_subcommand(
      "train", "minimize the observable from a sampled initialization (CSV)");
  CommonOpts train_opts;
  register_common(train, train_opts);
  std::string optimizer = "adam";
  double lr = 0.01;
  int iters = 500;
  bool print_ground = false;
  train->add_option("--optimizer", optimizer, "adam or gd");
  train->add_option("--lr", lr, "learning rate");
  train->add_option("--iters", iters, "gradient steps");
  train->add_flag("--ground", print_ground,
                  "also print the exact ground energy (dense, <= 12 qubits)");

  // bound
  CLI::App* bound = app.add_subcommand(
      "bound", "print the analytic expected-gradient-norm lower bound");
  CommonOpts bound_opts;
  register_common(bound, bound_opts);

  // tfim-gen
  CLI::App* tfim = app.add_subcommand(
      "tfim-gen", "write a transverse-field Ising observable file");
  int tfim_qubits = 4;
  std::string tfim_out = "tfim.json";
  tfim->add_option("--n-qubits", tfim_qubits, "chain length")->required();
  tfim->add_option("--out", tfim_out, "output JSON path")->required();

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return cmd_verify(verify_seed, verify_trials);
    if (gradscan->parsed()) {
      return cmd_gradscan(gradscan, scan_opts, scan_qubits, scan_strategies);
    }
    if (train->parsed()) {
      return cmd_train(train, train_opts, optimizer, lr, iters, print_ground);
    }
    if (bound->parsed()) return cmd_bound(bound, bound_opts);
    if (tfim->parsed()) return cmd_tfim_gen(tfim_qubits, tfim_out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
