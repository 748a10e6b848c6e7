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

#ifndef GMMVQC_SCAN_HPP_
#define GMMVQC_SCAN_HPP_

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "gmmvqc/config.hpp"
#include "gmmvqc/gradient.hpp"
#include "gmmvqc/init_strategy.hpp"
#include "gmmvqc/theory.hpp"

namespace gmmvqc {

struct ScanRow {
  int n_qubits = 0;
  int n_blocks = 0;
  std::string strategy;
  int n_samples = 0;
  double mean_norm_sq = 0.0;
  double stderr_norm_sq = 0.0;
  // Analytic lower bound where one applies to the strategy; unset otherwise.
  bool has_bound = false;
  double bound = 0.0;
};

namespace detail {

inline bool theorem_bound(StrategyKind kind, const CircuitSpec& spec,
                          const Observable& obs, const InitStrategy& strategy,
                          double* out) {
  const int L = spec.n_blocks;
  switch (kind) {
    case StrategyKind::Table1:
      *out = bound_theorem1(L);
      return true;
    case StrategyKind::Table2: {
      EquivalentTerms eq = count_equivalent_terms(obs, strategy.chosen_term);
      *out = bound_theorem2(eq.m, L);
      return true;
    }
    case StrategyKind::Table3:
      *out = bound_theorem3(obs, strategy.chosen_term, L);
      return true;
    default:
      return false;
  }
}

}  // namespace detail

// Monte Carlo estimate of the expected squared gradient norm for every
// (qubit count, strategy) cell requested by the config. Each cell gets its
// own observable, chosen term, and sample seeds, all derived from the run
// seed, so rows do not depend on scan order or worker count.
inline std::vector<ScanRow> run_gradscan(const RunConfig& cfg) {
  validate_config(cfg);
  std::vector<int> qubit_list =
      cfg.scan_qubits.empty() ? std::vector<int>{cfg.n_qubits}
                              : cfg.scan_qubits;
  std::vector<std::string> strategy_list =
      cfg.scan_strategies.empty() ? std::vector<std::string>{cfg.strategy.kind}
                                  : cfg.scan_strategies;

  std::vector<ScanRow> rows;
  for (int n : qubit_list) {
    const CircuitSpec spec = make_circuit(cfg, n);
    const Observable obs = make_observable(cfg, n);
    const int chosen = resolve_chosen_term(cfg, obs, n);
    const GradEngine engine = resolve_engine(cfg, n);
    for (std::size_t si = 0; si < strategy_list.size(); ++si) {
      RunConfig cell_cfg = cfg;
      cell_cfg.strategy.kind = strategy_list[si];
      const InitStrategy strategy = make_strategy(cell_cfg, spec, obs, chosen);
      const std::uint64_t base_seed =
          mix_seed(cfg.seed, seed_tag::kMcBase + 16 * si +
                                 static_cast<std::uint64_t>(n) * 1024);
      McGradStats stats = mc_grad_stats(spec, obs, strategy, cfg.n_samples,
                                        base_seed, engine, cfg.workers);
      ScanRow row;
      row.n_qubits = n;
      row.n_blocks = cfg.n_blocks;
      row.strategy = strategy.name;
      row.n_samples = stats.n_samples;
      row.mean_norm_sq = stats.mean_norm_sq;
      row.stderr_norm_sq = stats.stderr_norm_sq;
      row.has_bound =
          detail::theorem_bound(strategy.kind, spec, obs, strategy, &row.bound);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << "n_qubits,n_blocks,strategy,n_samples,mean_norm_sq,stderr_norm_sq,"
        "theorem_bound\n";
  char buf[128];
  for (const ScanRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%d,%s,%d,%.12g,%.12g,", row.n_qubits,
                  row.n_blocks, row.strategy.c_str(), row.n_samples,
                  row.mean_norm_sq, row.stderr_norm_sq);
    os << buf;
    if (row.has_bound) {
      std::snprintf(buf, sizeof(buf), "%.12g", row.bound);
      os << buf;
    }
    os << "\n";
  }
}

}  // namespace gmmvqc

#endif  // GMMVQC_SCAN_HPP_
