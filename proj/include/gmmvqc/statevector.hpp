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

#ifndef GMMVQC_STATEVECTOR_HPP_
#define GMMVQC_STATEVECTOR_HPP_

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "gmmvqc/ansatz.hpp"
#include "gmmvqc/pauli.hpp"

namespace gmmvqc {

// Dense amplitudes over the computational basis; index bit k is qubit k.
// Global phase is not tracked by any operation here.
struct StateVector {
  std::vector<std::complex<double>> amps;
  int n_qubits = 0;

  std::uint64_t dim() const { return std::uint64_t{1} << n_qubits; }
};

inline constexpr int kMaxQubits = 24;
inline constexpr int kMaxDenseQubits = 12;  // exact_ground_energy ceiling

inline StateVector init_zero(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("init_zero: n_qubits " +
                                std::to_string(n_qubits) +
                                " outside supported range [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
  StateVector s;
  s.n_qubits = n_qubits;
  s.amps.assign(std::uint64_t{1} << n_qubits, {0.0, 0.0});
  s.amps[0] = 1.0;
  return s;
}

inline void reset_zero(StateVector& s) {
  std::fill(s.amps.begin(), s.amps.end(), std::complex<double>{0.0, 0.0});
  s.amps[0] = 1.0;
}

inline double norm_sq(const StateVector& s) {
  double n = 0.0;
  for (const auto& a : s.amps) n += std::norm(a);
  return n;
}

inline std::complex<double> inner(const StateVector& a, const StateVector& b) {
  std::complex<double> acc{0.0, 0.0};
  for (std::uint64_t i = 0; i < a.dim(); ++i) {
    acc += std::conj(a.amps[i]) * b.amps[i];
  }
  return acc;
}

namespace detail {

inline void check_qubit(const StateVector& s, int q) {
  if (q < 0 || q >= s.n_qubits) {
    throw std::out_of_range("qubit " + std::to_string(q) +
                            " outside state range [0, " +
                            std::to_string(s.n_qubits) + ")");
  }
}

}  // namespace detail

// In-place exp(-i angle/2 X_q) or exp(-i angle/2 Y_q).
inline void apply_rotation(StateVector& s, Axis axis, int qubit,
                           double angle) {
  detail::check_qubit(s, qubit);
  const double c = std::cos(0.5 * angle);
  const double sn = std::sin(0.5 * angle);
  const std::uint64_t stride = std::uint64_t{1} << qubit;
  const std::uint64_t dim = s.dim();
  if (axis == Axis::X) {
    const std::complex<double> off{0.0, -sn};  // -i sin
    for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
      for (std::uint64_t k = 0; k < stride; ++k) {
        const std::uint64_t i0 = base + k;
        const std::uint64_t i1 = i0 + stride;
        const std::complex<double> a0 = s.amps[i0];
        const std::complex<double> a1 = s.amps[i1];
        s.amps[i0] = c * a0 + off * a1;
        s.amps[i1] = off * a0 + c * a1;
      }
    }
  } else {
    for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
      for (std::uint64_t k = 0; k < stride; ++k) {
        const std::uint64_t i0 = base + k;
        const std::uint64_t i1 = i0 + stride;
        const std::complex<double> a0 = s.amps[i0];
        const std::complex<double> a1 = s.amps[i1];
        s.amps[i0] = c * a0 - sn * a1;
        s.amps[i1] = sn * a0 + c * a1;
      }
    }
  }
}

inline void apply_cz(StateVector& s, int a, int b) {
  detail::check_qubit(s, a);
  detail::check_qubit(s, b);
  if (a == b) throw std::invalid_argument("apply_cz: identical qubits");
  const std::uint64_t mask =
      (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  const std::uint64_t dim = s.dim();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & mask) == mask) s.amps[i] = -s.amps[i];
  }
}

inline void apply_cz_layer(StateVector& s, const std::vector<Edge>& edges) {
  for (const Edge& e : edges) apply_cz(s, e.first, e.second);
}

namespace detail {

inline void check_params(const CircuitSpec& spec, const ParamMatrix& params) {
  if (params.n_layers != rotation_layer_count(spec) ||
      params.n_qubits != spec.n_qubits ||
      static_cast<int>(params.values.size()) != param_count(spec)) {
    throw std::invalid_argument(
        "parameter matrix shape (" + std::to_string(params.n_layers) + " x " +
        std::to_string(params.n_qubits) + ") does not match circuit (" +
        std::to_string(rotation_layer_count(spec)) + " x " +
        std::to_string(spec.n_qubits) + ")");
  }
}

}  // namespace detail

// Runs the full ansatz from |0...0> into `out` (storage reused across calls).
// Per block: CZ layer, then each rotation layer in gate order.
inline void run_circuit(const CircuitSpec& spec, const ParamMatrix& params,
                        StateVector& out) {
  detail::check_params(spec, params);
  if (out.n_qubits != spec.n_qubits ||
      out.amps.size() != (std::uint64_t{1} << spec.n_qubits)) {
    out = init_zero(spec.n_qubits);
  } else {
    reset_zero(out);
  }
  const int per_block = rotation_layers_per_block(spec.gate_order);
  for (int l = 0; l < spec.n_blocks; ++l) {
    apply_cz_layer(out, spec.block_edges[static_cast<std::size_t>(l)]);
    for (int r = 0; r < per_block; ++r) {
      const Axis axis = layer_axis(spec.gate_order, r);
      const int layer = l * per_block + r;
      for (int n = 0; n < spec.n_qubits; ++n) {
        apply_rotation(out, axis, n, params.at(layer, n));
      }
    }
  }
}

inline StateVector run_circuit(const CircuitSpec& spec,
                               const ParamMatrix& params) {
  StateVector out;
  run_circuit(spec, params, out);
  return out;
}

// <psi| P |psi> for a signed Pauli word, via the bitmask action
// P|b> = i^{ny} (-1)^{popcount(b & (ymask|zmask))} |b ^ (xmask|ymask)>.
inline double pauli_expectation(const StateVector& s, const PauliString& p) {
  if (p.n_qubits() != s.n_qubits) {
    throw std::invalid_argument("pauli_expectation: word acts on " +
                                std::to_string(p.n_qubits()) +
                                " qubits, state has " +
                                std::to_string(s.n_qubits));
  }
  std::uint64_t flip = 0, phase_mask = 0;
  int ny = 0;
  for (int k = 0; k < s.n_qubits; ++k) {
    switch (p.word[k]) {
      case Pauli::I: break;
      case Pauli::X: flip |= std::uint64_t{1} << k; break;
      case Pauli::Y:
        flip |= std::uint64_t{1} << k;
        phase_mask |= std::uint64_t{1} << k;
        ++ny;
        break;
      case Pauli::Z: phase_mask |= std::uint64_t{1} << k; break;
    }
  }
  const std::uint64_t dim = s.dim();
  std::complex<double> acc{0.0, 0.0};
  for (std::uint64_t b = 0; b < dim; ++b) {
    const double par = (std::popcount(b & phase_mask) & 1) ? -1.0 : 1.0;
    acc += par * std::conj(s.amps[b ^ flip]) * s.amps[b];
  }
  static constexpr std::complex<double> kIPow[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return p.sign * (kIPow[ny & 3] * acc).real();
}

inline double expectation(const StateVector& s, const Observable& obs) {
  if (obs.n_qubits() != s.n_qubits) {
    throw std::invalid_argument("expectation: observable acts on " +
                                std::to_string(obs.n_qubits()) +
                                " qubits, state has " +
                                std::to_string(s.n_qubits));
  }
  double e = 0.0;
  for (const ObsTerm& t : obs.terms()) {
    e += t.coeff * pauli_expectation(s, t.op);
  }
  return e;
}

// acc += coeff * (P |src>), same mask action as pauli_expectation.
inline void accumulate_pauli(StateVector& acc, const StateVector& src,
                             const PauliString& p, double coeff) {
  std::uint64_t flip = 0, phase_mask = 0;
  int ny = 0;
  for (int k = 0; k < src.n_qubits; ++k) {
    switch (p.word[k]) {
      case Pauli::I: break;
      case Pauli::X: flip |= std::uint64_t{1} << k; break;
      case Pauli::Y:
        flip |= std::uint64_t{1} << k;
        phase_mask |= std::uint64_t{1} << k;
        ++ny;
        break;
      case Pauli::Z: phase_mask |= std::uint64_t{1} << k; break;
    }
  }
  static constexpr std::complex<double> kIPow[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  const std::complex<double> scale = coeff * p.sign * kIPow[ny & 3];
  const std::uint64_t dim = src.dim();
  for (std::uint64_t b = 0; b < dim; ++b) {
    const std::uint64_t from = b ^ flip;
    const double par = (std::popcount(from & phase_mask) & 1) ? -1.0 : 1.0;
    acc.amps[b] += scale * par * src.amps[from];
  }
}

inline StateVector apply_observable(const Observable& obs,
                                    const StateVector& src) {
  if (obs.n_qubits() != src.n_qubits) {
    throw std::invalid_argument("apply_observable: qubit count mismatch");
  }
  StateVector out;
  out.n_qubits = src.n_qubits;
  out.amps.assign(src.dim(), {0.0, 0.0});
  for (const ObsTerm& t : obs.terms()) {
    accumulate_pauli(out, src, t.op, t.coeff);
  }
  return out;
}

// Smallest eigenvalue of the dense observable matrix. Reference oracle for
// training targets; the dense build caps the size at kMaxDenseQubits.
inline double exact_ground_energy(const Observable& obs) {
  const int n = obs.n_qubits();
  if (n > kMaxDenseQubits) {
    throw std::invalid_argument("exact_ground_energy: " + std::to_string(n) +
                                " qubits exceeds dense cap " +
                                std::to_string(kMaxDenseQubits));
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  static constexpr std::complex<double> kIPow[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  for (const ObsTerm& t : obs.terms()) {
    std::uint64_t flip = 0, phase_mask = 0;
    int ny = 0;
    for (int k = 0; k < n; ++k) {
      switch (t.op.word[k]) {
        case Pauli::I: break;
        case Pauli::X: flip |= std::uint64_t{1} << k; break;
        case Pauli::Y:
          flip |= std::uint64_t{1} << k;
          phase_mask |= std::uint64_t{1} << k;
          ++ny;
          break;
        case Pauli::Z: phase_mask |= std::uint64_t{1} << k; break;
      }
    }
    const std::complex<double> scale = t.coeff * t.op.sign * kIPow[ny & 3];
    for (std::uint64_t b = 0; b < dim; ++b) {
      const double par = (std::popcount(b & phase_mask) & 1) ? -1.0 : 1.0;
      h(b ^ flip, b) += scale * par;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("exact_ground_energy: eigensolver failed");
  }
  return solver.eigenvalues().minCoeff();
}

}  // namespace gmmvqc

#endif  // GMMVQC_STATEVECTOR_HPP_
