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

#ifndef GMMVQC_ANSATZ_HPP_
#define GMMVQC_ANSATZ_HPP_

#include <string>
#include <utility>
#include <vector>

#include "gmmvqc/pauli.hpp"

namespace gmmvqc {

// Order in which the rotation layers of one block are applied, left to right.
// RX_RY is the hardware-efficient default: per block, a CZ entangling layer,
// then Rx on every qubit, then Ry on every qubit.
enum class GateOrder { RX_RY, RY_RX, RX_RY_RX };

enum class Axis { X, Y };

inline int rotation_layers_per_block(GateOrder order) {
  return order == GateOrder::RX_RY_RX ? 3 : 2;
}

// Axis of rotation layer `r` (0-based) within a block.
inline Axis layer_axis(GateOrder order, int r) {
  switch (order) {
    case GateOrder::RX_RY:
      return r == 0 ? Axis::X : Axis::Y;
    case GateOrder::RY_RX:
      return r == 0 ? Axis::Y : Axis::X;
    case GateOrder::RX_RY_RX:
      return r == 1 ? Axis::Y : Axis::X;
  }
  throw std::logic_error("corrupt GateOrder value");
}

// Static description of the layered ansatz: L blocks on N qubits, each block
// a CZ layer followed by per-qubit rotation layers. block_edges always has
// one entry per block.
struct CircuitSpec {
  int n_qubits = 0;
  int n_blocks = 0;
  GateOrder gate_order = GateOrder::RX_RY;
  std::vector<std::vector<Edge>> block_edges;
  std::string entangler;  // preset name or "explicit", for reporting only
};

inline int rotation_layer_count(const CircuitSpec& spec) {
  return rotation_layers_per_block(spec.gate_order) * spec.n_blocks;
}

inline int param_count(const CircuitSpec& spec) {
  return rotation_layer_count(spec) * spec.n_qubits;
}

// Axis of 1-based rotation layer q across the whole circuit.
inline Axis circuit_layer_axis(const CircuitSpec& spec, int q) {
  const int per_block = rotation_layers_per_block(spec.gate_order);
  return layer_axis(spec.gate_order, (q - 1) % per_block);
}

// Flat index of parameter theta_{q,n}: rotation layer q in [1, R*L], qubit n
// in [1, N], laid out row-major by layer. The 1-based labels follow the
// theta_{q,n} convention used in reports; internal storage is 0-based.
inline int param_index(const CircuitSpec& spec, int q, int n) {
  if (q < 1 || q > rotation_layer_count(spec)) {
    throw std::out_of_range("param_index: layer " + std::to_string(q) +
                            " outside [1, " +
                            std::to_string(rotation_layer_count(spec)) + "]");
  }
  if (n < 1 || n > spec.n_qubits) {
    throw std::out_of_range("param_index: qubit " + std::to_string(n) +
                            " outside [1, " + std::to_string(spec.n_qubits) +
                            "]");
  }
  return (q - 1) * spec.n_qubits + (n - 1);
}

namespace detail {

inline void check_edges(int n_qubits, const std::vector<Edge>& edges) {
  for (const Edge& e : edges) {
    if (e.first < 0 || e.first >= n_qubits || e.second < 0 ||
        e.second >= n_qubits) {
      throw std::out_of_range("entangler edge (" + std::to_string(e.first) +
                              ", " + std::to_string(e.second) +
                              ") outside qubit range [0, " +
                              std::to_string(n_qubits) + ")");
    }
    if (e.first == e.second) {
      throw std::invalid_argument("entangler edge endpoints coincide: " +
                                  std::to_string(e.first));
    }
  }
}

}  // namespace detail

// Named entangler presets:
//   chain - (0,1), (1,2), ..., (N-2, N-1)
//   ring  - chain plus the wrap edge (N-1, 0) when N >= 3
//   none  - no CZ gates
// The preset edge list is replicated across blocks.
inline std::vector<Edge> entangler_edges(const std::string& preset,
                                         int n_qubits) {
  std::vector<Edge> edges;
  if (preset == "none") return edges;
  if (preset == "chain" || preset == "ring") {
    for (int k = 0; k + 1 < n_qubits; ++k) edges.emplace_back(k, k + 1);
    if (preset == "ring" && n_qubits >= 3) edges.emplace_back(n_qubits - 1, 0);
    return edges;
  }
  throw std::invalid_argument("unknown entangler preset \"" + preset +
                              "\"; expected chain, ring, or none");
}

inline CircuitSpec build_circuit_spec(int n_qubits, int n_blocks,
                                      const std::string& entangler,
                                      GateOrder order) {
  if (n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
  if (n_blocks < 1) throw std::invalid_argument("n_blocks must be >= 1");
  CircuitSpec spec;
  spec.n_qubits = n_qubits;
  spec.n_blocks = n_blocks;
  spec.gate_order = order;
  spec.entangler = entangler;
  spec.block_edges.assign(static_cast<std::size_t>(n_blocks),
                          entangler_edges(entangler, n_qubits));
  return spec;
}

// Explicit edge lists: one list replicated across blocks, or one list per
// block.
inline CircuitSpec build_circuit_spec(int n_qubits, int n_blocks,
                                      std::vector<std::vector<Edge>> edges,
                                      GateOrder order) {
  if (n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
  if (n_blocks < 1) throw std::invalid_argument("n_blocks must be >= 1");
  if (edges.size() != 1 && static_cast<int>(edges.size()) != n_blocks) {
    throw std::invalid_argument(
        "explicit entangler needs 1 or n_blocks edge lists, got " +
        std::to_string(edges.size()));
  }
  for (const auto& layer : edges) detail::check_edges(n_qubits, layer);
  CircuitSpec spec;
  spec.n_qubits = n_qubits;
  spec.n_blocks = n_blocks;
  spec.gate_order = order;
  spec.entangler = "explicit";
  if (edges.size() == 1) {
    spec.block_edges.assign(static_cast<std::size_t>(n_blocks), edges[0]);
  } else {
    spec.block_edges = std::move(edges);
  }
  return spec;
}

// Dense parameter container, one angle per (rotation layer, qubit) cell.
struct ParamMatrix {
  std::vector<double> values;  // layer-major: values[layer * n_qubits + qubit]
  int n_layers = 0;
  int n_qubits = 0;

  double& at(int layer, int qubit) {
    return values[static_cast<std::size_t>(layer) * n_qubits + qubit];
  }
  double at(int layer, int qubit) const {
    return values[static_cast<std::size_t>(layer) * n_qubits + qubit];
  }
};

inline ParamMatrix zero_params(const CircuitSpec& spec) {
  ParamMatrix p;
  p.n_layers = rotation_layer_count(spec);
  p.n_qubits = spec.n_qubits;
  p.values.assign(static_cast<std::size_t>(param_count(spec)), 0.0);
  return p;
}

// One step of the flattened circuit, in application order.
struct GateOp {
  enum class Kind { CzLayer, Rotation };
  Kind kind = Kind::CzLayer;
  int block = 0;   // CzLayer: index into block_edges
  Axis axis = Axis::X;
  int qubit = 0;   // Rotation only
  int param = 0;   // Rotation only: flat parameter index
};

inline std::vector<GateOp> circuit_tape(const CircuitSpec& spec) {
  const int per_block = rotation_layers_per_block(spec.gate_order);
  std::vector<GateOp> tape;
  tape.reserve(static_cast<std::size_t>(spec.n_blocks) *
               (1 + per_block * spec.n_qubits));
  for (int l = 0; l < spec.n_blocks; ++l) {
    GateOp cz;
    cz.kind = GateOp::Kind::CzLayer;
    cz.block = l;
    tape.push_back(cz);
    for (int r = 0; r < per_block; ++r) {
      const Axis axis = layer_axis(spec.gate_order, r);
      const int layer = l * per_block + r;
      for (int n = 0; n < spec.n_qubits; ++n) {
        GateOp rot;
        rot.kind = GateOp::Kind::Rotation;
        rot.block = l;
        rot.axis = axis;
        rot.qubit = n;
        rot.param = layer * spec.n_qubits + n;
        tape.push_back(rot);
      }
    }
  }
  return tape;
}

// Parameters of the final rotation layer whose generator commutes with every
// term of the observable at that qubit (the generator's axis Pauli or I).
// Such a rotation commutes through to the measurement, so the cost function
// does not depend on the angle at all. Returns 1-based (q, n) labels.
inline std::vector<std::pair<int, int>> detect_inactive(
    const CircuitSpec& spec, const Observable& obs) {
  if (obs.n_qubits() != spec.n_qubits) {
    throw std::invalid_argument("detect_inactive: observable acts on " +
                                std::to_string(obs.n_qubits()) +
                                " qubits, circuit has " +
                                std::to_string(spec.n_qubits));
  }
  const int per_block = rotation_layers_per_block(spec.gate_order);
  const Axis final_axis = layer_axis(spec.gate_order, per_block - 1);
  const Pauli gen = final_axis == Axis::X ? Pauli::X : Pauli::Y;
  const int q = rotation_layer_count(spec);

  std::vector<std::pair<int, int>> inactive;
  for (int n = 0; n < spec.n_qubits; ++n) {
    bool commutes_with_all = true;
    for (const ObsTerm& t : obs.terms()) {
      const Pauli o = t.op.word[n];
      if (o != Pauli::I && o != gen) {
        commutes_with_all = false;
        break;
      }
    }
    if (commutes_with_all) inactive.emplace_back(q, n + 1);
  }
  return inactive;
}

}  // namespace gmmvqc

#endif  // GMMVQC_ANSATZ_HPP_
