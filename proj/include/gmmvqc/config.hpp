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

#ifndef GMMVQC_CONFIG_HPP_
#define GMMVQC_CONFIG_HPP_

#include <cstdint>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gmmvqc/ansatz.hpp"
#include "gmmvqc/gradient.hpp"
#include "gmmvqc/init_strategy.hpp"
#include "gmmvqc/observables.hpp"
#include "gmmvqc/rng.hpp"

namespace gmmvqc {

// Every random quantity in a run derives from RunConfig::seed through
// mix_seed with one of these role tags (plus, where noted, the qubit count
// or cell index), so a config file reproduces a run exactly.
namespace seed_tag {
inline constexpr std::uint64_t kObservable = 1;   // + n_qubits
inline constexpr std::uint64_t kChosenTerm = 2;   // + n_qubits
inline constexpr std::uint64_t kMcBase = 3;       // + strategy index, + n_qubits
inline constexpr std::uint64_t kTrainInit = 4;
inline constexpr std::uint64_t kVerify = 5;
}  // namespace seed_tag

struct StrategyConfig {
  std::string kind = "table1";
  int term = -1;                  // -1: single term, or seed-drawn for scans
  double sigma2_override = -1.0;  // < 0: default 1 / (2 L S)
  bool z_variant_g3 = false;
  bool identity_g1 = false;
  double reduced_a = 0.07;
};

struct ObservableConfig {
  // source: tfim | random_global | file | inline
  std::string source = "tfim";
  std::string path;
  int n_plus = 10;
  int n_minus = 10;
  std::vector<std::pair<double, std::string>> inline_terms;
};

struct RunConfig {
  int n_qubits = 4;
  int n_blocks = 2;
  std::string entangler = "chain";
  std::string gate_order = "rx_ry";
  ObservableConfig observable;
  StrategyConfig strategy;
  std::uint64_t seed = 1;
  int n_samples = 100;
  int workers = 1;
  std::string engine = "auto";     // auto | shift | adjoint
  std::string optimizer = "adam";  // adam | gd
  double learning_rate = 0.01;
  int max_iters = 500;
  std::string out;                 // output path; empty means stdout
  std::vector<int> scan_qubits;            // gradscan cells; empty: n_qubits
  std::vector<std::string> scan_strategies;  // empty: strategy.kind
};

namespace detail {

template <typename T>
void read_field(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace detail

// Merges a JSON object into a config. Unknown keys are rejected so typos
// fail loudly instead of silently running defaults.
inline void apply_json(RunConfig& cfg, const nlohmann::json& j) {
  static const std::set<std::string> known = {
      "n_qubits", "n_blocks", "entangler", "gate_order", "observable",
      "strategy", "seed", "n_samples", "workers", "engine", "optimizer",
      "learning_rate", "max_iters", "out", "scan_qubits", "scan_strategies"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (known.find(it.key()) == known.end()) {
      throw std::invalid_argument("config: unknown key \"" + it.key() + "\"");
    }
  }
  detail::read_field(j, "n_qubits", cfg.n_qubits);
  detail::read_field(j, "n_blocks", cfg.n_blocks);
  detail::read_field(j, "entangler", cfg.entangler);
  detail::read_field(j, "gate_order", cfg.gate_order);
  detail::read_field(j, "seed", cfg.seed);
  detail::read_field(j, "n_samples", cfg.n_samples);
  detail::read_field(j, "workers", cfg.workers);
  detail::read_field(j, "engine", cfg.engine);
  detail::read_field(j, "optimizer", cfg.optimizer);
  detail::read_field(j, "learning_rate", cfg.learning_rate);
  detail::read_field(j, "max_iters", cfg.max_iters);
  detail::read_field(j, "out", cfg.out);
  detail::read_field(j, "scan_qubits", cfg.scan_qubits);
  detail::read_field(j, "scan_strategies", cfg.scan_strategies);
  if (j.contains("observable")) {
    const nlohmann::json& o = j.at("observable");
    detail::read_field(o, "source", cfg.observable.source);
    detail::read_field(o, "path", cfg.observable.path);
    detail::read_field(o, "n_plus", cfg.observable.n_plus);
    detail::read_field(o, "n_minus", cfg.observable.n_minus);
    if (o.contains("terms")) {
      cfg.observable.inline_terms.clear();
      for (const auto& rec : o.at("terms")) {
        cfg.observable.inline_terms.emplace_back(
            rec.at("coeff").get<double>(), rec.at("pauli").get<std::string>());
      }
    }
  }
  if (j.contains("strategy")) {
    const nlohmann::json& s = j.at("strategy");
    detail::read_field(s, "kind", cfg.strategy.kind);
    detail::read_field(s, "term", cfg.strategy.term);
    detail::read_field(s, "sigma2_override", cfg.strategy.sigma2_override);
    detail::read_field(s, "z_variant_g3", cfg.strategy.z_variant_g3);
    detail::read_field(s, "identity_g1", cfg.strategy.identity_g1);
    detail::read_field(s, "reduced_a", cfg.strategy.reduced_a);
  }
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file \"" + path + "\"");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("config file \"" + path +
                             "\" is not valid JSON: " + e.what());
  }
  RunConfig cfg;
  apply_json(cfg, j);
  return cfg;
}

inline void validate_config(const RunConfig& cfg) {
  if (cfg.n_qubits < 1 || cfg.n_qubits > kMaxQubits) {
    throw std::invalid_argument("config: n_qubits outside [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
  if (cfg.n_blocks < 1) throw std::invalid_argument("config: n_blocks >= 1");
  if (cfg.n_samples < 2) throw std::invalid_argument("config: n_samples >= 2");
  if (cfg.workers < 1) throw std::invalid_argument("config: workers >= 1");
  if (cfg.learning_rate <= 0.0) {
    throw std::invalid_argument("config: learning_rate > 0");
  }
  if (cfg.max_iters < 0) throw std::invalid_argument("config: max_iters >= 0");
  for (int n : cfg.scan_qubits) {
    if (n < 1 || n > kMaxQubits) {
      throw std::invalid_argument("config: scan_qubits entry outside range");
    }
  }
}

inline GateOrder gate_order_from_name(const std::string& name) {
  if (name == "rx_ry") return GateOrder::RX_RY;
  if (name == "ry_rx") return GateOrder::RY_RX;
  if (name == "rx_ry_rx") return GateOrder::RX_RY_RX;
  throw std::invalid_argument("unknown gate_order \"" + name +
                              "\"; expected rx_ry, ry_rx, or rx_ry_rx");
}

inline CircuitSpec make_circuit(const RunConfig& cfg, int n_qubits) {
  return build_circuit_spec(n_qubits, cfg.n_blocks, cfg.entangler,
                            gate_order_from_name(cfg.gate_order));
}

// Resolves the observable for a given qubit count (scans materialize one per
// cell). File and inline sources carry their own counts and must match.
inline Observable make_observable(const RunConfig& cfg, int n_qubits) {
  const ObservableConfig& o = cfg.observable;
  if (o.source == "tfim") return gen_tfim(n_qubits);
  if (o.source == "random_global") {
    return gen_random_global_ensemble(
        n_qubits, o.n_plus, o.n_minus,
        mix_seed(cfg.seed,
                 seed_tag::kObservable + static_cast<std::uint64_t>(n_qubits)));
  }
  if (o.source == "file") {
    Observable obs = load_observable_file(o.path);
    if (obs.n_qubits() != n_qubits) {
      throw std::invalid_argument(
          "observable file acts on " + std::to_string(obs.n_qubits()) +
          " qubits, run requests " + std::to_string(n_qubits));
    }
    return obs;
  }
  if (o.source == "inline") {
    std::vector<ObsTerm> terms;
    for (const auto& [coeff, word] : o.inline_terms) {
      terms.push_back(ObsTerm{coeff, parse_pauli(word, n_qubits)});
    }
    return Observable(n_qubits, std::move(terms));
  }
  throw std::invalid_argument("unknown observable source \"" + o.source +
                              "\"; expected tfim, random_global, file, or "
                              "inline");
}

// Chosen-term index for table strategies: explicit when >= 0, otherwise a
// seed-determined draw (single-term observables always pick term 0).
inline int resolve_chosen_term(const RunConfig& cfg, const Observable& obs,
                               int n_qubits) {
  if (cfg.strategy.term >= 0) {
    obs.term(cfg.strategy.term);  // range check
    return cfg.strategy.term;
  }
  if (obs.n_terms() == 1) return 0;
  std::mt19937_64 rng = make_stream(
      cfg.seed, seed_tag::kChosenTerm + static_cast<std::uint64_t>(n_qubits));
  return static_cast<int>(rng() % static_cast<std::uint64_t>(obs.n_terms()));
}

inline StrategyOptions make_strategy_options(const RunConfig& cfg) {
  StrategyOptions opt;
  opt.sigma2_override = cfg.strategy.sigma2_override;
  opt.z_variant_g3 = cfg.strategy.z_variant_g3;
  opt.identity_g1 = cfg.strategy.identity_g1;
  opt.reduced_a = cfg.strategy.reduced_a;
  return opt;
}

inline InitStrategy make_strategy(const RunConfig& cfg,
                                  const CircuitSpec& spec,
                                  const Observable& obs, int chosen_term) {
  return build_strategy(strategy_from_name(cfg.strategy.kind), spec, obs,
                        chosen_term, make_strategy_options(cfg));
}

// Engine selection: the reverse-mode engine wins once state evaluation
// dominates over parameter count; the shift rule stays the default reference
// on small registers.
inline GradEngine resolve_engine(const RunConfig& cfg, int n_qubits) {
  if (cfg.engine == "shift") return GradEngine::ParameterShift;
  if (cfg.engine == "adjoint") return GradEngine::Adjoint;
  if (cfg.engine == "auto") {
    return n_qubits >= 12 ? GradEngine::Adjoint : GradEngine::ParameterShift;
  }
  throw std::invalid_argument("unknown engine \"" + cfg.engine +
                              "\"; expected auto, shift, or adjoint");
}

}  // namespace gmmvqc

#endif  // GMMVQC_CONFIG_HPP_
