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

#ifndef GMMVQC_THEORY_HPP_
#define GMMVQC_THEORY_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gmmvqc/init_strategy.hpp"
#include "gmmvqc/pauli.hpp"
#include "gmmvqc/quadrature.hpp"
#include "gmmvqc/rng.hpp"

namespace gmmvqc {

// First and second trigonometric moments of N(0, sigma^2):
//   alpha = E[cos^2 theta] = (1 + e^{-2 sigma^2}) / 2
//   beta  = E[sin^2 theta] = (1 - e^{-2 sigma^2}) / 2
//   gamma = E[cos theta]   = e^{-sigma^2 / 2}
// Under the half mixture at +-pi/2 the roles of alpha and beta swap; under
// the three-component mixture they match the Gaussian case and gamma
// averages to zero. Always alpha >= 1/2 >= beta >= 0 and alpha + beta = 1.
struct MomentCoeffs {
  double sigma2 = 0.0;
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 1.0;
};

inline MomentCoeffs moment_coeffs(double sigma2) {
  if (sigma2 < 0.0 || !std::isfinite(sigma2)) {
    throw std::invalid_argument("moment_coeffs: sigma2 must be >= 0");
  }
  MomentCoeffs m;
  m.sigma2 = sigma2;
  const double decay = std::exp(-2.0 * sigma2);
  m.alpha = 0.5 * (1.0 + decay);
  m.beta = 0.5 * (1.0 - decay);
  m.gamma = std::exp(-0.5 * sigma2);
  return m;
}

// Gradient-norm lower bounds for the three strategy tables. The single-term
// bound grows with block count; the multi-term bound scales it by the number
// of Z<->I equivalent terms; the non-negative-coefficient bound adds the
// cross-term credit computed from pairwise word statistics.
inline double bound_theorem1(int n_blocks) {
  if (n_blocks < 1) {
    throw std::invalid_argument("bound_theorem1: n_blocks must be >= 1");
  }
  return 0.25 - 1.0 / (8.0 * n_blocks);
}

inline double bound_theorem2(int m_equivalent, int n_blocks) {
  if (m_equivalent < 1) {
    throw std::invalid_argument("bound_theorem2: M must be >= 1");
  }
  return m_equivalent * bound_theorem1(n_blocks);
}

inline double bound_theorem3(const Observable& obs, int chosen_term,
                             int n_blocks) {
  if (!obs.all_coeffs_nonnegative()) {
    throw std::invalid_argument(
        "bound_theorem3: requires non-negative coefficients");
  }
  const PauliString& ref = obs.term(chosen_term).op;
  const int s_count = support_size(ref);
  if (s_count < 1) {
    throw std::invalid_argument("bound_theorem3: chosen term has empty support");
  }
  const EquivalentTerms k = count_equivalent_terms(obs, chosen_term);
  const double l = n_blocks;
  const double ls2 = 2.0 * l * s_count;
  double bound = bound_theorem2(k.m, n_blocks);
  for (int i : k.indices) {
    for (int j : k.indices) {
      if (i == j) continue;
      const PairStats st = pair_stats(obs.term(i).op, obs.term(j).op);
      bound += (2.0 * l - 1.0) * st.s3 / ls2 *
               std::pow(1.0 - 1.0 / ls2, 2.0 * l * st.s13) *
               std::exp(-st.s03 / (2.0 * s_count));
    }
  }
  return bound;
}

// Quadrature-evaluated trigonometric moments of an arbitrary parameter law;
// the independent side of the moment-coefficient checks.
struct DistMoments {
  double e_cos = 0.0;
  double e_cos_sq = 0.0;
  double e_sin_sq = 0.0;
};

inline DistMoments quadrature_moments(const DistSpec& d, int n_nodes = 64) {
  DistMoments m;
  m.e_cos = expect_dist(d, [](double t) { return std::cos(t); }, n_nodes);
  m.e_cos_sq = expect_dist(
      d, [](double t) { return std::cos(t) * std::cos(t); }, n_nodes);
  m.e_sin_sq = expect_dist(
      d, [](double t) { return std::sin(t) * std::sin(t); }, n_nodes);
  return m;
}

// ---------------------------------------------------------------------------
// Expectation-identity verification.
//
// Each named case states one E_theta[...] identity about a rotation
// V = exp(-i theta G / 2) with a single-qubit Pauli generator G, operators
// that commute or anticommute with G, and a pure state rho = |psi><psi|.
// The left side is evaluated by quadrature over the parameter law, the right
// side from moment_coeffs closed forms; a report carries both.
// ---------------------------------------------------------------------------

// Distribution family the identity quantifies over. AnyLaw identities hold
// for every parameter law; the trial draws one of G1/G2/G3 at the given
// sigma^2.
enum class IdentityFamily { AnyLaw, G1, G2, G3 };

struct IdentityCase {
  std::string name;
  IdentityFamily family;
  int id;
};

inline const std::vector<IdentityCase>& identity_cases() {
  static const std::vector<IdentityCase> cases = {
      {"any_law.commuting_trace_invariant", IdentityFamily::AnyLaw, 0},
      {"any_law.commuting_trace_sq_invariant", IdentityFamily::AnyLaw, 1},
      {"any_law.commuting_deriv_zero", IdentityFamily::AnyLaw, 2},
      {"g1.trace_damping", IdentityFamily::G1, 3},
      {"g1.deriv_mean", IdentityFamily::G1, 4},
      {"g1.mixed_trace_product", IdentityFamily::G1, 5},
      {"g1.mixed_deriv_product_zero", IdentityFamily::G1, 6},
      {"g1.commuting_deriv_product_zero", IdentityFamily::G1, 7},
      {"g1.trace_product", IdentityFamily::G1, 8},
      {"g1.deriv_product", IdentityFamily::G1, 9},
      {"g1.trace_sq", IdentityFamily::G1, 10},
      {"g1.deriv_sq", IdentityFamily::G1, 11},
      {"g2.trace_zero", IdentityFamily::G2, 12},
      {"g2.deriv_zero", IdentityFamily::G2, 13},
      {"g2.mixed_trace_product_zero", IdentityFamily::G2, 14},
      {"g2.commuting_trace_product", IdentityFamily::G2, 15},
      {"g2.mixed_deriv_product_zero", IdentityFamily::G2, 16},
      {"g2.trace_product", IdentityFamily::G2, 17},
      {"g2.deriv_product", IdentityFamily::G2, 18},
      {"g2.trace_sq", IdentityFamily::G2, 19},
      {"g2.deriv_sq", IdentityFamily::G2, 20},
      {"g3.trace_zero", IdentityFamily::G3, 21},
      {"g3.deriv_zero", IdentityFamily::G3, 22},
      {"g3.mixed_trace_product_zero", IdentityFamily::G3, 23},
      {"g3.commuting_trace_product", IdentityFamily::G3, 24},
      {"g3.mixed_deriv_product_zero", IdentityFamily::G3, 25},
      {"g3.trace_product", IdentityFamily::G3, 26},
      {"g3.deriv_product", IdentityFamily::G3, 27},
      {"g3.trace_sq", IdentityFamily::G3, 28},
      {"g3.deriv_sq", IdentityFamily::G3, 29},
  };
  return cases;
}

inline std::vector<std::string> lemma_case_names() {
  std::vector<std::string> names;
  names.reserve(identity_cases().size());
  for (const IdentityCase& c : identity_cases()) names.push_back(c.name);
  return names;
}

struct LemmaReport {
  std::string lemma_case;
  double sigma2 = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
};

namespace detail {

using Cvec = Eigen::VectorXcd;
using Cmat = Eigen::MatrixXcd;

inline Cmat pauli_matrix_eigen(Pauli p) {
  Cmat m(2, 2);
  const std::complex<double> im(0.0, 1.0);
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -im, im, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Cmat kron(const Cmat& a, const Cmat& b) {
  Cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Word to matrix with qubit 0 as the least significant index bit.
inline Cmat word_matrix(const std::vector<Pauli>& word) {
  Cmat m = pauli_matrix_eigen(word.back());
  for (int k = static_cast<int>(word.size()) - 2; k >= 0; --k) {
    m = kron(m, pauli_matrix_eigen(word[static_cast<std::size_t>(k)]));
  }
  return m;
}

// One randomized operator/state configuration for identity checks. The
// generator is a single-qubit Pauli on qubit j; anti1/anti2 are real
// multiples of words anticommuting with it, comm1/comm2 of commuting words.
struct IdentityTrial {
  Cmat g;
  Cmat anti1, anti2;
  Cmat comm1, comm2;
  Cvec psi;
  Cvec gpsi;
};

inline double rand_coeff(std::mt19937_64& rng) {
  const double mag = std::uniform_real_distribution<double>(0.5, 1.5)(rng);
  return (rng() & 1) ? mag : -mag;
}

inline IdentityTrial sample_identity_trial(std::mt19937_64& rng) {
  const int n = 1 + static_cast<int>(rng() % 2);
  const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  const Pauli all[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  const Pauli nontrivial[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  const Pauli gp = nontrivial[rng() % 3];

  // The two single-qubit Paulis anticommuting with gp.
  Pauli anti_set[2];
  int na = 0;
  for (Pauli p : nontrivial) {
    if (p != gp) anti_set[na++] = p;
  }

  auto rand_word = [&](bool anticommute) -> Cmat {
    std::vector<Pauli> w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      if (k == j) {
        w[static_cast<std::size_t>(k)] =
            anticommute ? anti_set[rng() % 2] : (rng() & 1 ? gp : Pauli::I);
      } else {
        w[static_cast<std::size_t>(k)] = all[rng() % 4];
      }
    }
    Cmat m = word_matrix(w);
    m *= rand_coeff(rng);
    return m;
  };

  IdentityTrial t;
  std::vector<Pauli> gw(static_cast<std::size_t>(n), Pauli::I);
  gw[static_cast<std::size_t>(j)] = gp;
  t.g = word_matrix(gw);
  t.anti1 = rand_word(true);
  t.anti2 = rand_word(true);
  t.comm1 = rand_word(false);
  t.comm2 = rand_word(false);

  // The sampled relations are load-bearing for every identity: check them.
  auto assert_rel = [&](const Cmat& o, bool anticommute) {
    const Cmat rel = anticommute ? Cmat(t.g * o + o * t.g)
                                 : Cmat(t.g * o - o * t.g);
    if (rel.cwiseAbs().maxCoeff() > 1e-12) {
      throw std::logic_error("identity trial sampled an operator with the "
                             "wrong (anti)commutation relation");
    }
  };
  assert_rel(t.anti1, true);
  assert_rel(t.anti2, true);
  assert_rel(t.comm1, false);
  assert_rel(t.comm2, false);

  const Eigen::Index dim = t.g.rows();
  t.psi.resize(dim);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (Eigen::Index k = 0; k < dim; ++k) {
    t.psi(k) = std::complex<double>(gauss(rng), gauss(rng));
  }
  t.psi.normalize();
  t.gpsi = t.g * t.psi;
  return t;
}

// theta-dependent state and its derivative:
//   v(theta)  = cos(theta/2) psi - i sin(theta/2) G psi
//   v'(theta) = -1/2 sin(theta/2) psi - i/2 cos(theta/2) G psi
struct ThetaEval {
  const IdentityTrial& t;

  Cvec state(double theta) const {
    const std::complex<double> im(0.0, 1.0);
    return std::cos(0.5 * theta) * t.psi - im * std::sin(0.5 * theta) * t.gpsi;
  }
  Cvec state_deriv(double theta) const {
    const std::complex<double> im(0.0, 1.0);
    return -0.5 * std::sin(0.5 * theta) * t.psi -
           0.5 * im * std::cos(0.5 * theta) * t.gpsi;
  }
  // Tr[o V rho V^dag] for rho = |psi><psi|.
  double trace(const Cmat& o, double theta) const {
    const Cvec v = state(theta);
    return v.dot(o * v).real();
  }
  // d/dtheta of the same trace; exact, independent of the closed forms.
  double deriv(const Cmat& o, double theta) const {
    const Cvec v = state(theta);
    const Cvec vp = state_deriv(theta);
    return 2.0 * v.dot(o * vp).real();
  }
  // Static traces entering the closed forms.
  double stat_trace(const Cmat& o) const { return t.psi.dot(o * t.psi).real(); }
  double stat_itrace(const Cmat& o) const {
    const std::complex<double> im(0.0, 1.0);
    return t.psi.dot(im * (t.g * (o * t.psi))).real();
  }
};

}  // namespace detail

inline LemmaReport verify_lemma_identity(const std::string& lemma_case,
                                         double sigma2,
                                         std::uint64_t trial_seed) {
  if (sigma2 <= 0.0 || !std::isfinite(sigma2)) {
    throw std::invalid_argument("verify_lemma_identity: sigma2 must be > 0");
  }
  const IdentityCase* found = nullptr;
  for (const IdentityCase& c : identity_cases()) {
    if (c.name == lemma_case) {
      found = &c;
      break;
    }
  }
  if (found == nullptr) {
    throw std::invalid_argument("verify_lemma_identity: unknown case \"" +
                                lemma_case + "\"");
  }

  std::mt19937_64 rng =
      make_stream(trial_seed, static_cast<std::uint64_t>(found->id));
  DistSpec law = g1(sigma2);
  switch (found->family) {
    case IdentityFamily::AnyLaw: {
      const int pick = static_cast<int>(rng() % 3);
      law = pick == 0 ? g1(sigma2) : pick == 1 ? g2(sigma2) : g3(sigma2);
      break;
    }
    case IdentityFamily::G1: law = g1(sigma2); break;
    case IdentityFamily::G2: law = g2(sigma2); break;
    case IdentityFamily::G3: law = g3(sigma2); break;
  }

  const detail::IdentityTrial trial = detail::sample_identity_trial(rng);
  const detail::ThetaEval ev{trial};
  const MomentCoeffs mc = moment_coeffs(sigma2);

  const double a1 = ev.stat_trace(trial.anti1);
  const double a2 = ev.stat_trace(trial.anti2);
  const double da1 = ev.stat_itrace(trial.anti1);
  const double da2 = ev.stat_itrace(trial.anti2);
  const double c1 = ev.stat_trace(trial.comm1);
  const double c2 = ev.stat_trace(trial.comm2);

  auto mean = [&](auto&& f) { return expect_dist(law, f); };

  double lhs = 0.0;
  double rhs = 0.0;
  switch (found->id) {
    case 0:
      lhs = mean([&](double t) { return ev.trace(trial.comm1, t); });
      rhs = c1;
      break;
    case 1:
      lhs = mean([&](double t) {
        const double tr = ev.trace(trial.comm1, t);
        return tr * tr;
      });
      rhs = c1 * c1;
      break;
    case 2:
      lhs = mean([&](double t) { return ev.deriv(trial.comm1, t); });
      rhs = 0.0;
      break;
    case 3:
      lhs = mean([&](double t) { return ev.trace(trial.anti1, t); });
      rhs = mc.gamma * a1;
      break;
    case 4:
      lhs = mean([&](double t) { return ev.deriv(trial.anti1, t); });
      rhs = mc.gamma * da1;
      break;
    case 5:
      lhs = mean([&](double t) {
        return ev.trace(trial.comm1, t) * ev.trace(trial.anti1, t);
      });
      rhs = mc.gamma * c1 * a1;
      break;
    case 6:
    case 16:
    case 25:
      lhs = mean([&](double t) {
        return ev.deriv(trial.comm1, t) * ev.deriv(trial.anti2, t);
      });
      rhs = 0.0;
      break;
    case 7:
      lhs = mean([&](double t) {
        return ev.deriv(trial.comm1, t) * ev.deriv(trial.comm2, t);
      });
      rhs = 0.0;
      break;
    case 8:
    case 26:
      lhs = mean([&](double t) {
        return ev.trace(trial.anti1, t) * ev.trace(trial.anti2, t);
      });
      rhs = mc.alpha * a1 * a2 + mc.beta * da1 * da2;
      break;
    case 9:
    case 27:
      lhs = mean([&](double t) {
        return ev.deriv(trial.anti1, t) * ev.deriv(trial.anti2, t);
      });
      rhs = mc.beta * a1 * a2 + mc.alpha * da1 * da2;
      break;
    case 10:
    case 28:
      lhs = mean([&](double t) {
        const double tr = ev.trace(trial.anti1, t);
        return tr * tr;
      });
      rhs = mc.alpha * a1 * a1 + mc.beta * da1 * da1;
      break;
    case 11:
    case 29:
      lhs = mean([&](double t) {
        const double d = ev.deriv(trial.anti1, t);
        return d * d;
      });
      rhs = mc.beta * a1 * a1 + mc.alpha * da1 * da1;
      break;
    case 12:
    case 21:
      lhs = mean([&](double t) { return ev.trace(trial.anti1, t); });
      rhs = 0.0;
      break;
    case 13:
    case 22:
      lhs = mean([&](double t) { return ev.deriv(trial.anti1, t); });
      rhs = 0.0;
      break;
    case 14:
    case 23:
      lhs = mean([&](double t) {
        return ev.trace(trial.comm1, t) * ev.trace(trial.anti1, t);
      });
      rhs = 0.0;
      break;
    case 15:
    case 24:
      lhs = mean([&](double t) {
        return ev.trace(trial.comm1, t) * ev.trace(trial.comm2, t);
      });
      rhs = c1 * c2;
      break;
    case 17:
      lhs = mean([&](double t) {
        return ev.trace(trial.anti1, t) * ev.trace(trial.anti2, t);
      });
      rhs = mc.beta * a1 * a2 + mc.alpha * da1 * da2;
      break;
    case 18:
      lhs = mean([&](double t) {
        return ev.deriv(trial.anti1, t) * ev.deriv(trial.anti2, t);
      });
      rhs = mc.alpha * a1 * a2 + mc.beta * da1 * da2;
      break;
    case 19:
      lhs = mean([&](double t) {
        const double tr = ev.trace(trial.anti1, t);
        return tr * tr;
      });
      rhs = mc.beta * a1 * a1 + mc.alpha * da1 * da1;
      break;
    case 20:
      lhs = mean([&](double t) {
        const double d = ev.deriv(trial.anti1, t);
        return d * d;
      });
      rhs = mc.alpha * a1 * a1 + mc.beta * da1 * da1;
      break;
    default:
      throw std::logic_error("verify_lemma_identity: unhandled case id");
  }

  LemmaReport report;
  report.lemma_case = lemma_case;
  report.sigma2 = sigma2;
  report.lhs = lhs;
  report.rhs = rhs;
  report.abs_err = std::abs(lhs - rhs);
  return report;
}

}  // namespace gmmvqc

#endif  // GMMVQC_THEORY_HPP_
