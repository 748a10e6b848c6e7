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

#ifndef GMMVQC_INIT_STRATEGY_HPP_
#define GMMVQC_INIT_STRATEGY_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmmvqc/ansatz.hpp"
#include "gmmvqc/pauli.hpp"
#include "gmmvqc/rng.hpp"

namespace gmmvqc {

struct GaussianComponent {
  double weight = 1.0;
  double mean = 0.0;
  double variance = 0.0;
};

// Sampling law for one parameter cell: a uniform interval or a finite
// Gaussian mixture. Mixture weights are positive and sum to one.
struct DistSpec {
  enum class Kind { Uniform, Gaussian, Mixture };

  Kind kind = Kind::Uniform;
  double lo = 0.0;  // Uniform only
  double hi = 0.0;
  std::vector<GaussianComponent> components;

  static DistSpec uniform(double lo, double hi) {
    if (!(lo < hi)) {
      throw std::invalid_argument("DistSpec::uniform: empty interval");
    }
    DistSpec d;
    d.kind = Kind::Uniform;
    d.lo = lo;
    d.hi = hi;
    return d;
  }

  static DistSpec gaussian(double mean, double variance) {
    if (variance < 0.0 || !std::isfinite(variance)) {
      throw std::invalid_argument("DistSpec::gaussian: bad variance");
    }
    DistSpec d;
    d.kind = Kind::Gaussian;
    d.components = {GaussianComponent{1.0, mean, variance}};
    return d;
  }

  static DistSpec mixture(std::vector<GaussianComponent> comps) {
    if (comps.empty()) {
      throw std::invalid_argument("DistSpec::mixture: no components");
    }
    double total = 0.0;
    for (const GaussianComponent& c : comps) {
      if (c.weight <= 0.0 || c.variance < 0.0 || !std::isfinite(c.mean)) {
        throw std::invalid_argument("DistSpec::mixture: bad component");
      }
      total += c.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
      throw std::invalid_argument("DistSpec::mixture: weights sum to " +
                                  std::to_string(total) + ", expected 1");
    }
    DistSpec d;
    d.kind = Kind::Mixture;
    d.components = std::move(comps);
    return d;
  }
};

inline bool operator==(const GaussianComponent& a,
                       const GaussianComponent& b) {
  return a.weight == b.weight && a.mean == b.mean && a.variance == b.variance;
}

inline bool operator==(const DistSpec& a, const DistSpec& b) {
  return a.kind == b.kind && a.lo == b.lo && a.hi == b.hi &&
         a.components == b.components;
}

// The four parameter laws of the initialization scheme. G0 is the flat
// reference law on [-pi, pi]; G1..G3 are Gaussian mixtures whose component
// means sit at stationary angles and whose common variance shrinks with
// circuit size.
inline DistSpec g0() {
  return DistSpec::uniform(-std::numbers::pi, std::numbers::pi);
}

inline DistSpec g1(double sigma2) { return DistSpec::gaussian(0.0, sigma2); }

inline DistSpec g2(double sigma2) {
  const double half_pi = 0.5 * std::numbers::pi;
  return DistSpec::mixture({GaussianComponent{0.5, -half_pi, sigma2},
                            GaussianComponent{0.5, half_pi, sigma2}});
}

inline DistSpec g3(double sigma2) {
  const double pi = std::numbers::pi;
  return DistSpec::mixture({GaussianComponent{0.25, -pi, sigma2},
                            GaussianComponent{0.25, pi, sigma2},
                            GaussianComponent{0.5, 0.0, sigma2}});
}

enum class StrategyKind {
  Table1,            // single designated term
  Table2,            // linear combinations, arbitrary signs
  Table3,            // non-negative coefficients, cross-term credit
  Uniform,           // baseline U[-pi, pi] everywhere
  GaussianBaseline,  // baseline N(0, 1/(4S(L+2))) everywhere
  ReducedDomain      // baseline U[-a pi, a pi] everywhere
};

inline std::string strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Table1: return "table1";
    case StrategyKind::Table2: return "table2";
    case StrategyKind::Table3: return "table3";
    case StrategyKind::Uniform: return "uniform";
    case StrategyKind::GaussianBaseline: return "gaussian_baseline";
    case StrategyKind::ReducedDomain: return "reduced_domain";
  }
  throw std::logic_error("corrupt StrategyKind value");
}

inline StrategyKind strategy_from_name(const std::string& name) {
  if (name == "table1") return StrategyKind::Table1;
  if (name == "table2") return StrategyKind::Table2;
  if (name == "table3") return StrategyKind::Table3;
  if (name == "uniform") return StrategyKind::Uniform;
  if (name == "gaussian_baseline" || name == "gaussian")
    return StrategyKind::GaussianBaseline;
  if (name == "reduced_domain" || name == "reduced")
    return StrategyKind::ReducedDomain;
  throw std::invalid_argument(
      "unknown strategy \"" + name +
      "\"; expected table1, table2, table3, uniform, gaussian_baseline, or "
      "reduced_domain");
}

struct StrategyOptions {
  double sigma2_override = -1.0;  // < 0 selects the default 1 / (2 L S)
  bool z_variant_g3 = false;      // Table 1, Z column: G1 (default) or G3
  bool identity_g1 = false;       // Table 1, I column: G0 (default) or G1
  double reduced_a = 0.07;        // reduced-domain half width, in units of pi
};

// Per-cell sampling grid for a circuit, plus the metadata reports need.
struct InitStrategy {
  StrategyKind kind = StrategyKind::Uniform;
  std::string name;
  int n_layers = 0;
  int n_qubits = 0;
  double sigma2 = 0.0;   // table variance, or the baseline Gaussian variance
  int chosen_term = -1;
  std::vector<DistSpec> dists;  // layer-major, dists[layer * n_qubits + qubit]

  const DistSpec& at(int layer, int qubit) const {
    return dists[static_cast<std::size_t>(layer) * n_qubits + qubit];
  }
};

// Terms whose word matches the chosen term's everywhere except positions
// where one side has Z and the other I. The chosen term always qualifies,
// so m >= 1.
struct EquivalentTerms {
  int m = 0;
  std::vector<int> indices;
};

inline EquivalentTerms count_equivalent_terms(const Observable& obs,
                                              int chosen) {
  const PauliString& ref = obs.term(chosen).op;
  EquivalentTerms out;
  for (int t = 0; t < obs.n_terms(); ++t) {
    const PauliString& w = obs.term(t).op;
    bool equivalent = true;
    for (int k = 0; k < obs.n_qubits(); ++k) {
      const Pauli a = ref.word[k];
      const Pauli b = w.word[k];
      if (a == b) continue;
      const bool z_vs_i = (a == Pauli::Z && b == Pauli::I) ||
                          (a == Pauli::I && b == Pauli::Z);
      if (!z_vs_i) {
        equivalent = false;
        break;
      }
    }
    if (equivalent) out.indices.push_back(t);
  }
  out.m = static_cast<int>(out.indices.size());
  return out;
}

namespace detail {

// Table rows are keyed by layer position inside the final block, matching
// how the interchanged-arrangement tables relate to the originals: the final
// rotation layer carries the (X -> G2) column pattern, the layer before it
// the (Y -> G2) pattern.
inline DistSpec table_cell_two_layers(StrategyKind kind, Pauli o, bool final_layer,
                                      double s2, const StrategyOptions& opt) {
  switch (kind) {
    case StrategyKind::Table1:
      switch (o) {
        case Pauli::X: return final_layer ? g2(s2) : g1(s2);
        case Pauli::Y: return final_layer ? g0() : g2(s2);
        case Pauli::Z: return opt.z_variant_g3 ? g3(s2) : g1(s2);
        case Pauli::I: return opt.identity_g1 ? g1(s2) : g0();
      }
      break;
    case StrategyKind::Table2:
      switch (o) {
        case Pauli::X: return final_layer ? g2(s2) : g1(s2);
        case Pauli::Y: return final_layer ? g1(s2) : g2(s2);
        case Pauli::Z: return g3(s2);
        case Pauli::I: return g3(s2);
      }
      break;
    case StrategyKind::Table3:
      switch (o) {
        case Pauli::X: return final_layer ? g2(s2) : g1(s2);
        case Pauli::Y: return final_layer ? g1(s2) : g2(s2);
        case Pauli::Z: return g1(s2);
        case Pauli::I: return g1(s2);
      }
      break;
    default:
      break;
  }
  throw std::logic_error("table_cell_two_layers: not a table strategy");
}

// Three-rotation arrangement: the first rotation layer of the final block is
// G3 on every qubit; the remaining two layers share one column pattern.
inline DistSpec table_cell_three_layers(Pauli o, int r, double s2) {
  if (r == 0) return g3(s2);
  switch (o) {
    case Pauli::X: return g1(s2);
    case Pauli::Y: return g2(s2);
    case Pauli::Z: return g3(s2);
    case Pauli::I: return g3(s2);
  }
  throw std::logic_error("corrupt Pauli value");
}

}  // namespace detail

// Builds the per-cell sampling grid for `spec`. Table kinds assign the final
// block from the chosen term's word and every earlier layer from G1(sigma^2)
// with sigma^2 = 1 / (2 L S); baselines use one law everywhere. chosen_term
// may be -1 only when the observable has a single term (tables) or to mean
// "whole register" (baselines, S = N).
inline InitStrategy build_strategy(StrategyKind kind, const CircuitSpec& spec,
                                   const Observable& obs, int chosen_term,
                                   const StrategyOptions& opt = {}) {
  if (obs.n_qubits() != spec.n_qubits) {
    throw std::invalid_argument("build_strategy: observable acts on " +
                                std::to_string(obs.n_qubits()) +
                                " qubits, circuit has " +
                                std::to_string(spec.n_qubits));
  }
  const bool table_kind = kind == StrategyKind::Table1 ||
                          kind == StrategyKind::Table2 ||
                          kind == StrategyKind::Table3;
  if (chosen_term == -1 && table_kind) {
    if (obs.n_terms() != 1) {
      throw std::invalid_argument(
          "build_strategy: table strategies need a chosen term when the "
          "observable has more than one term");
    }
    chosen_term = 0;
  }
  if (chosen_term != -1) obs.term(chosen_term);  // range check

  const int L = spec.n_blocks;
  const int N = spec.n_qubits;
  const int per_block = rotation_layers_per_block(spec.gate_order);
  int s_count = N;
  if (chosen_term >= 0) s_count = support_size(obs.term(chosen_term).op);

  InitStrategy st;
  st.kind = kind;
  st.name = strategy_name(kind);
  st.n_layers = rotation_layer_count(spec);
  st.n_qubits = N;
  st.chosen_term = chosen_term;
  st.dists.reserve(static_cast<std::size_t>(st.n_layers) * N);

  if (kind == StrategyKind::Uniform) {
    st.sigma2 = 0.0;
    st.dists.assign(static_cast<std::size_t>(st.n_layers) * N, g0());
    return st;
  }
  if (kind == StrategyKind::ReducedDomain) {
    if (opt.reduced_a <= 0.0) {
      throw std::invalid_argument("build_strategy: reduced_a must be > 0");
    }
    st.sigma2 = 0.0;
    const double a = opt.reduced_a * std::numbers::pi;
    st.dists.assign(static_cast<std::size_t>(st.n_layers) * N,
                    DistSpec::uniform(-a, a));
    return st;
  }
  if (kind == StrategyKind::GaussianBaseline) {
    if (s_count == 0) {
      throw std::invalid_argument(
          "build_strategy: chosen term is the identity (empty support)");
    }
    st.sigma2 = 1.0 / (4.0 * s_count * (L + 2));
    st.dists.assign(static_cast<std::size_t>(st.n_layers) * N,
                    g1(st.sigma2));
    return st;
  }

  if (s_count == 0) {
    throw std::invalid_argument(
        "build_strategy: chosen term is the identity (empty support)");
  }
  if (kind == StrategyKind::Table3 && !obs.all_coeffs_nonnegative()) {
    throw std::invalid_argument(
        "build_strategy: table3 requires non-negative coefficients");
  }
  const double s2 = opt.sigma2_override >= 0.0 ? opt.sigma2_override
                                               : 1.0 / (2.0 * L * s_count);
  st.sigma2 = s2;

  const PauliString& word = obs.term(chosen_term).op;
  for (int layer = 0; layer < st.n_layers; ++layer) {
    const bool last_block = layer / per_block == L - 1;
    const int r = layer % per_block;
    for (int n = 0; n < N; ++n) {
      if (!last_block) {
        st.dists.push_back(g1(s2));
      } else if (per_block == 3) {
        st.dists.push_back(detail::table_cell_three_layers(word.word[n], r, s2));
      } else {
        st.dists.push_back(detail::table_cell_two_layers(
            kind, word.word[n], r == per_block - 1, s2, opt));
      }
    }
  }
  return st;
}

inline double sample_angle(const DistSpec& d, std::mt19937_64& rng) {
  if (d.kind == DistSpec::Kind::Uniform) {
    return std::uniform_real_distribution<double>(d.lo, d.hi)(rng);
  }
  const GaussianComponent* comp = &d.components.front();
  if (d.components.size() > 1) {
    double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    for (const GaussianComponent& c : d.components) {
      u -= c.weight;
      comp = &c;
      if (u <= 0.0) break;
    }
  }
  if (comp->variance == 0.0) return comp->mean;
  return std::normal_distribution<double>(comp->mean,
                                          std::sqrt(comp->variance))(rng);
}

// One draw per cell, each cell on its own seed stream so the result is
// independent of evaluation order.
inline ParamMatrix sample_params(const InitStrategy& st, std::uint64_t seed) {
  ParamMatrix p;
  p.n_layers = st.n_layers;
  p.n_qubits = st.n_qubits;
  p.values.resize(st.dists.size());
  for (std::size_t i = 0; i < st.dists.size(); ++i) {
    std::mt19937_64 rng = make_stream(seed, i);
    p.values[i] = sample_angle(st.dists[i], rng);
  }
  return p;
}

}  // namespace gmmvqc

#endif  // GMMVQC_INIT_STRATEGY_HPP_
