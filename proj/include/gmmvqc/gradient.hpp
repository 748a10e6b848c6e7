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

#ifndef GMMVQC_GRADIENT_HPP_
#define GMMVQC_GRADIENT_HPP_

#include <atomic>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "gmmvqc/ansatz.hpp"
#include "gmmvqc/init_strategy.hpp"
#include "gmmvqc/statevector.hpp"

namespace gmmvqc {

enum class GradEngine { ParameterShift, Adjoint, FiniteDifference };

struct GradReport {
  double cost = 0.0;
  std::vector<double> grad;
  double norm_sq = 0.0;
};

inline double cost(const CircuitSpec& spec, const Observable& obs,
                   const ParamMatrix& params) {
  return expectation(run_circuit(spec, params), obs);
}

namespace detail {

inline double grad_norm_sq(const std::vector<double>& g) {
  double acc = 0.0;
  for (double v : g) acc += v * v;
  return acc;
}

}  // namespace detail

// d f / d theta_k = (f(theta_k+pi/2) - f(theta_k-pi/2)) / 2, exact for
// rotations generated by an involution. Conformance reference engine.
inline GradReport grad_parameter_shift(const CircuitSpec& spec,
                                       const Observable& obs,
                                       const ParamMatrix& params) {
  GradReport rep;
  ParamMatrix shifted = params;
  StateVector buf;
  rep.grad.resize(params.values.size());
  constexpr double kShift = 0.5 * std::numbers::pi;
  for (std::size_t k = 0; k < params.values.size(); ++k) {
    shifted.values[k] = params.values[k] + kShift;
    run_circuit(spec, shifted, buf);
    const double plus = expectation(buf, obs);
    shifted.values[k] = params.values[k] - kShift;
    run_circuit(spec, shifted, buf);
    const double minus = expectation(buf, obs);
    shifted.values[k] = params.values[k];
    rep.grad[k] = 0.5 * (plus - minus);
  }
  run_circuit(spec, params, buf);
  rep.cost = expectation(buf, obs);
  rep.norm_sq = detail::grad_norm_sq(rep.grad);
  return rep;
}

// Central finite differences; numerical oracle only, accuracy O(step^2).
inline GradReport grad_finite_difference(const CircuitSpec& spec,
                                         const Observable& obs,
                                         const ParamMatrix& params,
                                         double step = 1e-5) {
  if (step <= 0.0) {
    throw std::invalid_argument("grad_finite_difference: step must be > 0");
  }
  GradReport rep;
  ParamMatrix shifted = params;
  StateVector buf;
  rep.grad.resize(params.values.size());
  for (std::size_t k = 0; k < params.values.size(); ++k) {
    shifted.values[k] = params.values[k] + step;
    run_circuit(spec, shifted, buf);
    const double plus = expectation(buf, obs);
    shifted.values[k] = params.values[k] - step;
    run_circuit(spec, shifted, buf);
    const double minus = expectation(buf, obs);
    shifted.values[k] = params.values[k];
    rep.grad[k] = (plus - minus) / (2.0 * step);
  }
  run_circuit(spec, params, buf);
  rep.cost = expectation(buf, obs);
  rep.norm_sq = detail::grad_norm_sq(rep.grad);
  return rep;
}

namespace detail {

// Im <lambda| G_q |phi> for a single-qubit Pauli generator G on `qubit`.
inline double adjoint_overlap(const StateVector& lambda,
                              const StateVector& phi, Axis axis, int qubit) {
  const std::uint64_t stride = std::uint64_t{1} << qubit;
  const std::uint64_t dim = lambda.dim();
  std::complex<double> acc{0.0, 0.0};
  if (axis == Axis::X) {
    for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
      for (std::uint64_t k = 0; k < stride; ++k) {
        const std::uint64_t i0 = base + k;
        const std::uint64_t i1 = i0 + stride;
        acc += std::conj(lambda.amps[i0]) * phi.amps[i1] +
               std::conj(lambda.amps[i1]) * phi.amps[i0];
      }
    }
  } else {
    const std::complex<double> im{0.0, 1.0};
    for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
      for (std::uint64_t k = 0; k < stride; ++k) {
        const std::uint64_t i0 = base + k;
        const std::uint64_t i1 = i0 + stride;
        acc += std::conj(lambda.amps[i0]) * (-im * phi.amps[i1]) +
               std::conj(lambda.amps[i1]) * (im * phi.amps[i0]);
      }
    }
  }
  return acc.imag();
}

}  // namespace detail

// Reverse-mode differentiation of <psi(theta)| O |psi(theta)>: one forward
// pass, then a single backward sweep undoing each gate on the two retained
// states. For gate k with generator G_k,
//   d f / d theta_k = Im <lambda_k| G_k |phi_k>,
// where phi_k is the state after gate k and lambda_k is O psi pulled back
// through the gates after k. Cost is ~3 circuit applications regardless of
// the parameter count.
inline GradReport grad_adjoint(const CircuitSpec& spec, const Observable& obs,
                               const ParamMatrix& params) {
  GradReport rep;
  rep.grad.assign(params.values.size(), 0.0);

  StateVector phi = run_circuit(spec, params);
  StateVector lambda = apply_observable(obs, phi);
  rep.cost = inner(phi, lambda).real();

  const std::vector<GateOp> tape = circuit_tape(spec);
  for (auto it = tape.rbegin(); it != tape.rend(); ++it) {
    if (it->kind == GateOp::Kind::CzLayer) {
      const auto& edges = spec.block_edges[static_cast<std::size_t>(it->block)];
      apply_cz_layer(phi, edges);  // CZ is self-inverse
      apply_cz_layer(lambda, edges);
      continue;
    }
    rep.grad[static_cast<std::size_t>(it->param)] =
        detail::adjoint_overlap(lambda, phi, it->axis, it->qubit);
    const double angle = params.values[static_cast<std::size_t>(it->param)];
    apply_rotation(phi, it->axis, it->qubit, -angle);
    apply_rotation(lambda, it->axis, it->qubit, -angle);
  }
  rep.norm_sq = detail::grad_norm_sq(rep.grad);
  return rep;
}

inline GradReport gradient(const CircuitSpec& spec, const Observable& obs,
                           const ParamMatrix& params, GradEngine engine) {
  switch (engine) {
    case GradEngine::ParameterShift:
      return grad_parameter_shift(spec, obs, params);
    case GradEngine::Adjoint:
      return grad_adjoint(spec, obs, params);
    case GradEngine::FiniteDifference:
      return grad_finite_difference(spec, obs, params);
  }
  throw std::logic_error("corrupt GradEngine value");
}

// Monte-Carlo statistics of the gradient under an initialization strategy.
struct McGradStats {
  int n_samples = 0;
  double mean_norm_sq = 0.0;
  double stderr_norm_sq = 0.0;
  std::vector<double> component_mean;
  std::vector<double> component_stderr;
};

// Draws n_samples parameter matrices (sample i on seed base_seed + i),
// evaluates the gradient for each, and aggregates. Samples may be computed
// by up to n_workers threads; aggregation always runs in sample order after
// all samples finish, so the result is bit-identical for any worker count.
inline McGradStats mc_grad_stats(const CircuitSpec& spec,
                                 const Observable& obs,
                                 const InitStrategy& strategy, int n_samples,
                                 std::uint64_t base_seed, GradEngine engine,
                                 int n_workers = 1) {
  if (n_samples < 2) {
    throw std::invalid_argument("mc_grad_stats: need n_samples >= 2");
  }
  if (n_workers < 1) {
    throw std::invalid_argument("mc_grad_stats: need n_workers >= 1");
  }
  const std::size_t dim = static_cast<std::size_t>(param_count(spec));
  std::vector<std::vector<double>> grads(
      static_cast<std::size_t>(n_samples));
  std::vector<double> norms(static_cast<std::size_t>(n_samples));

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n_samples) return;
      const ParamMatrix params =
          sample_params(strategy, base_seed + static_cast<std::uint64_t>(i));
      GradReport rep = gradient(spec, obs, params, engine);
      norms[static_cast<std::size_t>(i)] = rep.norm_sq;
      grads[static_cast<std::size_t>(i)] = std::move(rep.grad);
    }
  };

  const int threads = std::min(n_workers, n_samples);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  McGradStats stats;
  stats.n_samples = n_samples;
  stats.component_mean.assign(dim, 0.0);
  stats.component_stderr.assign(dim, 0.0);

  for (int i = 0; i < n_samples; ++i) {
    stats.mean_norm_sq += norms[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < dim; ++k) {
      stats.component_mean[k] += grads[static_cast<std::size_t>(i)][k];
    }
  }
  stats.mean_norm_sq /= n_samples;
  for (std::size_t k = 0; k < dim; ++k) stats.component_mean[k] /= n_samples;

  double var_norm = 0.0;
  std::vector<double> var_comp(dim, 0.0);
  for (int i = 0; i < n_samples; ++i) {
    const double dn = norms[static_cast<std::size_t>(i)] - stats.mean_norm_sq;
    var_norm += dn * dn;
    for (std::size_t k = 0; k < dim; ++k) {
      const double dc =
          grads[static_cast<std::size_t>(i)][k] - stats.component_mean[k];
      var_comp[k] += dc * dc;
    }
  }
  // Bessel-corrected standard error of the mean.
  const double denom = static_cast<double>(n_samples - 1) * n_samples;
  stats.stderr_norm_sq = std::sqrt(var_norm / denom);
  for (std::size_t k = 0; k < dim; ++k) {
    stats.component_stderr[k] = std::sqrt(var_comp[k] / denom);
  }
  return stats;
}

}  // namespace gmmvqc

#endif  // GMMVQC_GRADIENT_HPP_
