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
// Runtime self-checks: every analytic ingredient (the CZ conjugation table,
// the Gaussian moment coefficients, the per-gate averaging identities, the
// gradient engines, and the inactive-parameter detector) is re-derived here
// through an independent numeric route and compared against the closed forms
// used by the library.

#ifndef GMMVQC_VERIFY_HPP_
#define GMMVQC_VERIFY_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "gmmvqc/ansatz.hpp"
#include "gmmvqc/gradient.hpp"
#include "gmmvqc/init_strategy.hpp"
#include "gmmvqc/pauli.hpp"
#include "gmmvqc/rng.hpp"
#include "gmmvqc/statevector.hpp"
#include "gmmvqc/theory.hpp"

namespace gmmvqc {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_abs_err = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

// Confirms every conjugation-table entry against the dense matrix identity
// CZ (A x B) CZ = sign (A' x B'), built with Eigen rather than the fixed
// 4x4 arithmetic the table generator uses.
inline CheckResult check_cz_table(const CzTable& table) {
  using detail::Cmat;
  Cmat cz = Cmat::Zero(4, 4);
  cz(0, 0) = 1.0;
  cz(1, 1) = 1.0;
  cz(2, 2) = 1.0;
  cz(3, 3) = -1.0;

  double max_err = 0.0;
  for (int ia = 0; ia < 4; ++ia) {
    for (int ib = 0; ib < 4; ++ib) {
      const Pauli a = static_cast<Pauli>(ia);
      const Pauli b = static_cast<Pauli>(ib);
      const CzEntry& e = table[static_cast<std::size_t>(cz_table_index(a, b))];
      const Cmat lhs = cz * detail::word_matrix({a, b}) * cz;
      const Cmat rhs = e.sign * detail::word_matrix({e.a, e.b});
      max_err = std::max(max_err, (lhs - rhs).cwiseAbs().maxCoeff());
      if (std::abs(std::abs(e.sign) - 1.0) > 0.0) max_err = 1.0;
    }
  }
  CheckResult r;
  r.name = "cz_table";
  r.tolerance = 1e-12;
  r.max_abs_err = max_err;
  r.passed = max_err <= r.tolerance;
  r.detail = "16 pauli pairs vs dense conjugation";
  return r;
}

// Compares the closed-form moment coefficients against quadrature moments of
// all three Gaussian families on a variance grid, and checks the polynomial
// lower bounds used by the gradient-norm theorems.
inline CheckResult check_moment_coeffs() {
  static const double grid[10] = {1e-4, 1e-3, 0.01, 0.05, 0.1,
                                  0.25, 0.5,  1.0,  2.0,  4.0};
  double max_err = 0.0;
  auto track = [&max_err](double got, double want) {
    max_err = std::max(max_err, std::abs(got - want));
  };
  for (double s2 : grid) {
    const MomentCoeffs mc = moment_coeffs(s2);
    const DistMoments m1 = quadrature_moments(g1(s2));
    const DistMoments m2 = quadrature_moments(g2(s2));
    const DistMoments m3 = quadrature_moments(g3(s2));
    track(m1.e_cos, mc.gamma);
    track(m1.e_cos_sq, mc.alpha);
    track(m1.e_sin_sq, mc.beta);
    track(m2.e_cos, 0.0);
    track(m2.e_cos_sq, mc.beta);   // the centered and shifted families
    track(m2.e_sin_sq, mc.alpha);  // exchange the two second moments
    track(m3.e_cos, 0.0);
    track(m3.e_cos_sq, mc.alpha);
    track(m3.e_sin_sq, mc.beta);
    track(mc.alpha + mc.beta, 1.0);
    // One-sided polynomial bounds: any violation counts as error.
    max_err = std::max(max_err, (1.0 - s2) - mc.alpha);
    max_err = std::max(max_err, s2 * (1.0 - s2) - mc.beta);
    if (mc.gamma <= 0.0 || mc.gamma > 1.0) max_err = std::max(max_err, 1.0);
  }
  CheckResult r;
  r.name = "moment_coeffs";
  r.tolerance = 1e-10;
  r.max_abs_err = max_err;
  r.passed = max_err <= r.tolerance;
  r.detail = "3 families x 10 variances vs quadrature";
  return r;
}

// One result per averaging identity, aggregated over the variance grid and
// the randomized operator/state trials.
inline std::vector<CheckResult> check_lemma_identities(std::uint64_t seed,
                                                       int trials = 50) {
  static const double variances[3] = {0.01, 0.1, 0.5};
  std::vector<CheckResult> results;
  for (const std::string& name : lemma_case_names()) {
    CheckResult r;
    r.name = "identity." + name;
    r.tolerance = 1e-8;
    r.max_abs_err = 0.0;
    for (int vi = 0; vi < 3; ++vi) {
      for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed =
            mix_seed(seed, static_cast<std::uint64_t>(t) * 4 +
                               static_cast<std::uint64_t>(vi));
        const LemmaReport rep =
            verify_lemma_identity(name, variances[vi], trial_seed);
        r.max_abs_err = std::max(r.max_abs_err, rep.abs_err);
      }
    }
    r.passed = r.max_abs_err <= r.tolerance;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "3 variances x %d trials", trials);
    r.detail = buf;
    results.push_back(std::move(r));
  }
  return results;
}

namespace detail {

inline Observable random_small_observable(int n_qubits,
                                          std::mt19937_64& rng) {
  const int n_terms = 1 + static_cast<int>(rng() % 3);
  std::uniform_real_distribution<double> coeff(0.5, 1.5);
  std::vector<ObsTerm> terms;
  for (int k = 0; k < n_terms; ++k) {
    std::vector<Pauli> word(static_cast<std::size_t>(n_qubits), Pauli::I);
    bool nontrivial = false;
    for (int q = 0; q < n_qubits; ++q) {
      const int p = static_cast<int>(rng() % 4);
      word[static_cast<std::size_t>(q)] = static_cast<Pauli>(p);
      nontrivial = nontrivial || p != 0;
    }
    if (!nontrivial) {
      word[0] = Pauli::Z;
    }
    const double sign = (rng() & 1) ? 1.0 : -1.0;
    terms.push_back(ObsTerm{sign * coeff(rng), PauliString{word, 1}});
  }
  return Observable(n_qubits, std::move(terms));
}

inline ParamMatrix random_uniform_params(const CircuitSpec& spec,
                                         std::mt19937_64& rng) {
  ParamMatrix p = zero_params(spec);
  std::uniform_real_distribution<double> angle(-3.14159265358979323846,
                                               3.14159265358979323846);
  for (double& v : p.values) v = angle(rng);
  return p;
}

}  // namespace detail

// Cross-checks all three gradient engines on random circuit instances: the
// two analytic engines must agree to near machine precision, and both must
// match central finite differences to the truncation-error level.
inline std::vector<CheckResult> check_gradient_engines(std::uint64_t seed,
                                                       int trials = 20) {
  static const GateOrder orders[3] = {GateOrder::RX_RY, GateOrder::RY_RX,
                                      GateOrder::RX_RY_RX};
  double err_adjoint = 0.0;
  double err_fd = 0.0;
  double err_cost = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng = make_stream(seed, 1000 + static_cast<unsigned>(t));
    const int n = 2 + static_cast<int>(rng() % 4);
    const int blocks = 1 + static_cast<int>(rng() % 3);
    const GateOrder order = orders[rng() % 3];
    const std::string entangler = (rng() & 1) ? "chain" : "ring";
    const CircuitSpec spec = build_circuit_spec(n, blocks, entangler, order);
    const Observable obs = detail::random_small_observable(n, rng);
    const ParamMatrix params = detail::random_uniform_params(spec, rng);

    const GradReport shift =
        gradient(spec, obs, params, GradEngine::ParameterShift);
    const GradReport adjoint = gradient(spec, obs, params, GradEngine::Adjoint);
    const GradReport fd =
        gradient(spec, obs, params, GradEngine::FiniteDifference);
    err_cost = std::max(err_cost, std::abs(shift.cost - adjoint.cost));
    for (std::size_t k = 0; k < shift.grad.size(); ++k) {
      err_adjoint =
          std::max(err_adjoint, std::abs(shift.grad[k] - adjoint.grad[k]));
      err_fd = std::max(err_fd, std::abs(shift.grad[k] - fd.grad[k]));
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf),
                "%d random instances, cost gap %.3g", trials, err_cost);
  CheckResult a;
  a.name = "gradient_engines.shift_vs_adjoint";
  a.tolerance = 1e-10;
  a.max_abs_err = std::max(err_adjoint, err_cost);
  a.passed = a.max_abs_err <= a.tolerance;
  a.detail = buf;
  CheckResult f;
  f.name = "gradient_engines.shift_vs_fd";
  f.tolerance = 1e-6;
  f.max_abs_err = err_fd;
  f.passed = err_fd <= f.tolerance;
  std::snprintf(buf, sizeof(buf), "%d random instances, central step 1e-5",
                trials);
  f.detail = buf;
  return {a, f};
}

// Parameters whose final-layer generator commutes with the observable at
// their qubit cannot move the cost; their analytic gradient must vanish to
// rounding noise at arbitrary points.
inline CheckResult check_inactive_params(std::uint64_t seed, int trials = 20) {
  double max_err = 0.0;
  bool detector_ok = true;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng = make_stream(seed, 2000 + static_cast<unsigned>(t));
    const int n = 2 + static_cast<int>(rng() % 3);
    const int blocks = 1 + static_cast<int>(rng() % 2);
    const CircuitSpec spec =
        build_circuit_spec(n, blocks, "chain", GateOrder::RX_RY);
    // Words over {Y, I} commute with the closing Ry layer on every qubit.
    std::vector<Pauli> word(static_cast<std::size_t>(n), Pauli::I);
    for (int q = 0; q < n; ++q) {
      word[static_cast<std::size_t>(q)] = (rng() & 1) ? Pauli::Y : Pauli::I;
    }
    word[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n))] =
        Pauli::Y;
    Observable obs(n, {ObsTerm{1.0, PauliString{word, 1}}});

    const std::vector<std::pair<int, int>> flagged = detect_inactive(spec, obs);
    if (static_cast<int>(flagged.size()) != n) detector_ok = false;
    const ParamMatrix params = detail::random_uniform_params(spec, rng);
    const GradReport rep =
        gradient(spec, obs, params, GradEngine::ParameterShift);
    for (const auto& [q, nq] : flagged) {
      const int idx = param_index(spec, q, nq);
      max_err = std::max(max_err,
                         std::abs(rep.grad[static_cast<std::size_t>(idx)]));
    }
  }
  CheckResult r;
  r.name = "inactive_params";
  r.tolerance = 1e-12;
  r.max_abs_err = detector_ok ? max_err : 1.0;
  r.passed = detector_ok && max_err <= r.tolerance;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%d commuting-closure instances%s", trials,
                detector_ok ? "" : "; detector missed qubits");
  r.detail = buf;
  return r;
}

inline std::vector<CheckResult> run_verification(std::uint64_t seed,
                                                 int trials = 50) {
  std::vector<CheckResult> results;
  results.push_back(check_cz_table(cz_table()));
  results.push_back(check_moment_coeffs());
  for (CheckResult& r : check_lemma_identities(seed, trials)) {
    results.push_back(std::move(r));
  }
  for (CheckResult& r : check_gradient_engines(seed)) {
    results.push_back(std::move(r));
  }
  results.push_back(check_inactive_params(seed));
  return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace gmmvqc

#endif  // GMMVQC_VERIFY_HPP_
