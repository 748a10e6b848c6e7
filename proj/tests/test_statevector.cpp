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

#include <cmath>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "gmmvqc/observables.hpp"
#include "gmmvqc/rng.hpp"
#include "gmmvqc/statevector.hpp"
#include "oracles.hpp"

using namespace gmmvqc;

namespace {

StateVector random_state(int n_qubits, std::uint64_t seed) {
  StateVector s = init_zero(n_qubits);
  std::mt19937_64 rng = make_stream(seed, 99);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto& a : s.amps) a = {gauss(rng), gauss(rng)};
  const double norm = std::sqrt(norm_sq(s));
  for (auto& a : s.amps) a /= norm;
  return s;
}

}  // namespace

TEST_CASE("init_zero prepares the all-zeros basis state") {
  const StateVector s = init_zero(3);
  REQUIRE(s.n_qubits == 3);
  REQUIRE(s.dim() == 8);
  REQUIRE(s.amps[0] == std::complex<double>(1.0, 0.0));
  for (std::size_t k = 1; k < s.amps.size(); ++k) {
    REQUIRE(s.amps[k] == std::complex<double>(0.0, 0.0));
  }
  REQUIRE_THROWS_AS(init_zero(0), std::invalid_argument);
  REQUIRE_THROWS_AS(init_zero(kMaxQubits + 1), std::invalid_argument);
}

TEST_CASE("single-qubit rotations reproduce hand values") {
  // Ry(pi/2)|0> = (|0> + |1>) / sqrt(2), real amplitudes.
  StateVector s = init_zero(1);
  apply_rotation(s, Axis::Y, 0, M_PI / 2.0);
  REQUIRE(std::abs(s.amps[0] - std::complex<double>(M_SQRT1_2, 0)) < 1e-15);
  REQUIRE(std::abs(s.amps[1] - std::complex<double>(M_SQRT1_2, 0)) < 1e-15);

  // Rx(pi)|0> = -i|1>.
  reset_zero(s);
  apply_rotation(s, Axis::X, 0, M_PI);
  REQUIRE(std::abs(s.amps[0]) < 1e-15);
  REQUIRE(std::abs(s.amps[1] - std::complex<double>(0, -1)) < 1e-15);
}

TEST_CASE("rotations act on the addressed qubit and preserve the norm") {
  for (int q = 0; q < 3; ++q) {
    StateVector s = random_state(3, 17 + q);
    const oracle::Cvec before = oracle::to_eigen(s);
    apply_rotation(s, Axis::X, q, 0.8312);
    const oracle::Cvec want =
        oracle::rotation_mat(3, Axis::X, q, 0.8312) * before;
    REQUIRE((oracle::to_eigen(s) - want).cwiseAbs().maxCoeff() < 1e-14);
    REQUIRE(std::abs(norm_sq(s) - 1.0) < 1e-13);
  }
  StateVector s = init_zero(2);
  REQUIRE_THROWS_AS(apply_rotation(s, Axis::X, 2, 1.0), std::out_of_range);
}

TEST_CASE("cz flips the phase of the both-ones subspace") {
  StateVector s = random_state(2, 5);
  const StateVector before = s;
  apply_cz(s, 0, 1);
  for (std::size_t k = 0; k < s.amps.size(); ++k) {
    const double want = (k == 3) ? -1.0 : 1.0;
    REQUIRE(s.amps[k] == want * before.amps[k]);
  }
  // Symmetric in the edge endpoints, self-inverse.
  apply_cz(s, 1, 0);
  for (std::size_t k = 0; k < s.amps.size(); ++k) {
    REQUIRE(s.amps[k] == before.amps[k]);
  }
  REQUIRE_THROWS_AS(apply_cz(s, 0, 0), std::invalid_argument);
}

TEST_CASE("pauli expectations match the dense oracle on random states") {
  const int n = 4;
  const StateVector s = random_state(n, 23);
  const oracle::Cvec psi = oracle::to_eigen(s);
  const char* words[] = {"IIII", "XIII", "IYII", "IIZI", "XYZI",
                         "ZZZZ", "YYXX", "IZIZ", "XXXX", "YIYI"};
  for (const char* w : words) {
    const PauliString p = parse_pauli(w, n);
    const double got = pauli_expectation(s, p);
    const double want =
        (psi.adjoint() * oracle::word_mat(p.word) * psi)(0, 0).real();
    INFO("word " << w);
    REQUIRE(std::abs(got - want) < 1e-13);
  }
  // The sign multiplies the expectation.
  PauliString p = parse_pauli("XYZI", n);
  p.sign = -1.0;
  REQUIRE(std::abs(pauli_expectation(s, p) +
                   pauli_expectation(s, parse_pauli("XYZI", n))) < 1e-15);
}

TEST_CASE("expectation sums coefficient-weighted terms") {
  const StateVector s = random_state(3, 31);
  const Observable obs(3, {ObsTerm{0.7, parse_pauli("ZIZ", 3)},
                           ObsTerm{-1.3, parse_pauli("XYI", 3)}});
  const double got = expectation(s, obs);
  const double want = oracle::dense_expectation(obs, oracle::to_eigen(s));
  REQUIRE(std::abs(got - want) < 1e-13);
}

TEST_CASE("apply_observable matches dense matrix action") {
  const int n = 3;
  const StateVector s = random_state(n, 47);
  const Observable obs(n, {ObsTerm{0.5, parse_pauli("ZZI", n)},
                           ObsTerm{1.25, parse_pauli("IXY", n)},
                           ObsTerm{-2.0, parse_pauli("YIZ", n)}});
  const StateVector got = apply_observable(obs, s);
  const oracle::Cvec want =
      oracle::observable_mat(obs) * oracle::to_eigen(s);
  REQUIRE((oracle::to_eigen(got) - want).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("full circuits agree with the dense simulator") {
  std::mt19937_64 rng = make_stream(2024, 0);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  const GateOrder orders[] = {GateOrder::RX_RY, GateOrder::RY_RX,
                              GateOrder::RX_RY_RX};
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int blocks = 1 + static_cast<int>(rng() % 3);
    const std::string entangler = (rng() & 1) ? "chain" : "ring";
    const CircuitSpec spec =
        build_circuit_spec(n, blocks, entangler, orders[rng() % 3]);
    ParamMatrix params = zero_params(spec);
    for (double& v : params.values) v = angle(rng);

    const StateVector got = run_circuit(spec, params);
    const oracle::Cvec want = oracle::dense_run_circuit(spec, params);
    INFO("trial " << trial << ": " << n << " qubits, " << blocks
                  << " blocks, " << entangler);
    REQUIRE((oracle::to_eigen(got) - want).cwiseAbs().maxCoeff() < 1e-12);
    REQUIRE(std::abs(norm_sq(got) - 1.0) < 1e-12);
  }
}

TEST_CASE("run_circuit validates the parameter shape") {
  const CircuitSpec spec = build_circuit_spec(3, 2, "chain", GateOrder::RX_RY);
  ParamMatrix bad;
  bad.n_layers = 3;
  bad.n_qubits = 3;
  bad.values.assign(9, 0.0);
  StateVector out;
  REQUIRE_THROWS_AS(run_circuit(spec, bad, out), std::invalid_argument);
}

TEST_CASE("conjugating one rotation mixes statics with known weights") {
  // For a generator G and observable O with {G, O} = 0,
  //   <psi| R(t)^dag O R(t) |psi> = cos t <O> + sin t <iGO>,
  // which ties the kernel, the expectation code, and the sign conventions
  // together. With G = Y: iYX = i(-iZ) = Z and iYZ = i(iX) = -X.
  const StateVector s = random_state(1, 61);
  const double t = 0.7341;
  StateVector rotated = s;
  apply_rotation(rotated, Axis::Y, 0, t);

  const double x0 = pauli_expectation(s, parse_pauli("X", 1));
  const double z0 = pauli_expectation(s, parse_pauli("Z", 1));
  const double x1 = pauli_expectation(rotated, parse_pauli("X", 1));
  const double z1 = pauli_expectation(rotated, parse_pauli("Z", 1));
  REQUIRE(std::abs(x1 - (std::cos(t) * x0 + std::sin(t) * z0)) < 1e-13);
  REQUIRE(std::abs(z1 - (std::cos(t) * z0 - std::sin(t) * x0)) < 1e-13);
}

TEST_CASE("heisenberg and schroedinger pictures of cz agree") {
  const int n = 3;
  const StateVector s = random_state(n, 71);
  const Edge edge{1, 2};
  const char* words[] = {"XYI", "IXX", "ZYX", "YYY", "XIZ"};
  for (const char* w : words) {
    const PauliString p = parse_pauli(w, n);
    StateVector moved = s;
    apply_cz(moved, edge.first, edge.second);
    const double schroedinger = pauli_expectation(moved, p);
    const double heisenberg = pauli_expectation(s, cz_conjugate(p, edge));
    INFO("word " << w);
    REQUIRE(std::abs(schroedinger - heisenberg) < 1e-13);
  }
}

TEST_CASE("exact ground energy of the two-qubit transverse-field chain") {
  // H = Z0 Z1 - X0 - X1 has ground energy -sqrt(5).
  const Observable obs = gen_tfim(2);
  REQUIRE(std::abs(exact_ground_energy(obs) + std::sqrt(5.0)) < 1e-12);
}

TEST_CASE("exact ground energy rejects oversized registers") {
  const Observable obs(13, {ObsTerm{1.0, parse_pauli("ZIIIIIIIIIIII", 13)}});
  REQUIRE_THROWS_AS(exact_ground_energy(obs), std::invalid_argument);
}
