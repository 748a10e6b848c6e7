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

#ifndef GMMVQC_QUADRATURE_HPP_
#define GMMVQC_QUADRATURE_HPP_

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gmmvqc/init_strategy.hpp"

namespace gmmvqc {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
// orthogonal-polynomial family, weights come from the first eigenvector
// components scaled by the total weight-function mass.
inline QuadratureRule golub_welsch(const std::vector<double>& off_diag,
                                   double mass) {
  const int n = static_cast<int>(off_diag.size()) + 1;
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) {
    jacobi(k, k + 1) = off_diag[static_cast<std::size_t>(k)];
    jacobi(k + 1, k) = off_diag[static_cast<std::size_t>(k)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("golub_welsch: eigensolver failed");
  }
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    rule.nodes[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
    const double v0 = solver.eigenvectors()(0, k);
    rule.weights[static_cast<std::size_t>(k)] = mass * v0 * v0;
  }
  return rule;
}

}  // namespace detail

// Gauss-Hermite rule for the weight exp(-x^2) on the real line.
inline const QuadratureRule& gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: n must be >= 1");
  static std::map<int, QuadratureRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<double> off(static_cast<std::size_t>(n - 1));
    for (int k = 1; k < n; ++k) {
      off[static_cast<std::size_t>(k - 1)] = std::sqrt(0.5 * k);
    }
    it = cache.emplace(n, detail::golub_welsch(off, std::sqrt(std::numbers::pi)))
             .first;
  }
  return it->second;
}

// Gauss-Legendre rule for the weight 1 on [-1, 1].
inline const QuadratureRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  static std::map<int, QuadratureRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<double> off(static_cast<std::size_t>(n - 1));
    for (int k = 1; k < n; ++k) {
      off[static_cast<std::size_t>(k - 1)] =
          k / std::sqrt(4.0 * k * k - 1.0);
    }
    it = cache.emplace(n, detail::golub_welsch(off, 2.0)).first;
  }
  return it->second;
}

// E[f(theta)] for theta ~ d, by deterministic quadrature: Gauss-Hermite per
// Gaussian component (n_nodes each), Gauss-Legendre for uniform laws. The
// integrands used in this library are entire trigonometric expressions, for
// which 64 nodes are exact to machine precision.
template <typename F>
double expect_dist(const DistSpec& d, F&& f, int n_nodes = 64) {
  if (d.kind == DistSpec::Kind::Uniform) {
    const QuadratureRule& rule = gauss_legendre(n_nodes);
    const double mid = 0.5 * (d.lo + d.hi);
    const double half = 0.5 * (d.hi - d.lo);
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      acc += 0.5 * rule.weights[k] * f(mid + half * rule.nodes[k]);
    }
    return acc;
  }
  const QuadratureRule& rule = gauss_hermite(n_nodes);
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  double acc = 0.0;
  for (const GaussianComponent& c : d.components) {
    if (c.variance == 0.0) {
      acc += c.weight * f(c.mean);
      continue;
    }
    const double scale = std::sqrt(2.0 * c.variance);
    double comp = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      comp += rule.weights[k] * f(c.mean + scale * rule.nodes[k]);
    }
    acc += c.weight * inv_sqrt_pi * comp;
  }
  return acc;
}

}  // namespace gmmvqc

#endif  // GMMVQC_QUADRATURE_HPP_
