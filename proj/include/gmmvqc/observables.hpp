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

#ifndef GMMVQC_OBSERVABLES_HPP_
#define GMMVQC_OBSERVABLES_HPP_

#include <cmath>
#include <cstdint>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmmvqc/pauli.hpp"
#include "gmmvqc/rng.hpp"

namespace gmmvqc {

// Open-chain transverse-field Ising Hamiltonian,
//   H = sum_i Z_i Z_{i+1} - sum_i X_i,
// with the coupling terms listed before the field terms.
inline Observable gen_tfim(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("gen_tfim: n_qubits >= 1");
  std::vector<ObsTerm> terms;
  for (int k = 0; k + 1 < n_qubits; ++k) {
    PauliString p;
    p.word.assign(static_cast<std::size_t>(n_qubits), Pauli::I);
    p.word[static_cast<std::size_t>(k)] = Pauli::Z;
    p.word[static_cast<std::size_t>(k + 1)] = Pauli::Z;
    terms.push_back(ObsTerm{1.0, p});
  }
  for (int k = 0; k < n_qubits; ++k) {
    PauliString p;
    p.word.assign(static_cast<std::size_t>(n_qubits), Pauli::I);
    p.word[static_cast<std::size_t>(k)] = Pauli::X;
    terms.push_back(ObsTerm{-1.0, p});
  }
  return Observable(n_qubits, std::move(terms));
}

// Ensemble of distinct global words drawn uniformly over {X, Y, Z}^N, the
// first n_plus with coefficient +1, the rest -1. Duplicates are redrawn, so
// n_plus + n_minus must not exceed 3^N.
inline Observable gen_random_global_ensemble(int n_qubits, int n_plus,
                                             int n_minus,
                                             std::uint64_t seed) {
  if (n_qubits < 1) {
    throw std::invalid_argument("gen_random_global_ensemble: n_qubits >= 1");
  }
  if (n_plus < 0 || n_minus < 0 || n_plus + n_minus < 1) {
    throw std::invalid_argument(
        "gen_random_global_ensemble: need at least one term");
  }
  const double capacity = std::pow(3.0, n_qubits);
  if (static_cast<double>(n_plus) + n_minus > capacity) {
    throw std::invalid_argument(
        "gen_random_global_ensemble: more terms than distinct global words");
  }
  std::mt19937_64 rng(seed);
  const Pauli nontrivial[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  std::set<std::string> seen;
  std::vector<ObsTerm> terms;
  const int total = n_plus + n_minus;
  while (static_cast<int>(terms.size()) < total) {
    PauliString p;
    p.word.reserve(static_cast<std::size_t>(n_qubits));
    for (int k = 0; k < n_qubits; ++k) {
      p.word.push_back(nontrivial[rng() % 3]);
    }
    if (!seen.insert(to_string(p)).second) continue;
    const double coeff =
        static_cast<int>(terms.size()) < n_plus ? 1.0 : -1.0;
    terms.push_back(ObsTerm{coeff, p});
  }
  return Observable(n_qubits, std::move(terms));
}

// Observable files are JSON with a qubit-count guard and one record per
// term:
//   { "n_qubits": 2, "terms": [ { "coeff": 1.0, "pauli": "ZZ" }, ... ] }
inline Observable load_observable_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open observable file \"" + path + "\"");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("observable file \"" + path +
                             "\" is not valid JSON: " + e.what());
  }
  if (!j.contains("n_qubits") || !j.contains("terms")) {
    throw std::runtime_error("observable file \"" + path +
                             "\" needs n_qubits and terms fields");
  }
  const int n = j.at("n_qubits").get<int>();
  std::vector<ObsTerm> terms;
  for (const auto& rec : j.at("terms")) {
    ObsTerm t;
    t.coeff = rec.at("coeff").get<double>();
    t.op = parse_pauli(rec.at("pauli").get<std::string>(), n);
    terms.push_back(std::move(t));
  }
  return Observable(n, std::move(terms));
}

inline void save_observable_file(const Observable& obs,
                                 const std::string& path) {
  nlohmann::json j;
  j["n_qubits"] = obs.n_qubits();
  j["terms"] = nlohmann::json::array();
  for (const ObsTerm& t : obs.terms()) {
    j["terms"].push_back({{"coeff", t.coeff}, {"pauli", to_string(t.op)}});
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write observable file \"" + path + "\"");
  }
  out << j.dump(2) << "\n";
}

}  // namespace gmmvqc

#endif  // GMMVQC_OBSERVABLES_HPP_
