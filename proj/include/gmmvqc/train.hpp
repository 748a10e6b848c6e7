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

#ifndef GMMVQC_TRAIN_HPP_
#define GMMVQC_TRAIN_HPP_

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmmvqc/ansatz.hpp"
#include "gmmvqc/gradient.hpp"
#include "gmmvqc/init_strategy.hpp"
#include "gmmvqc/pauli.hpp"

namespace gmmvqc {

enum class Optimizer { GradientDescent, Adam };

inline Optimizer optimizer_from_name(const std::string& name) {
  if (name == "gd") return Optimizer::GradientDescent;
  if (name == "adam") return Optimizer::Adam;
  throw std::invalid_argument("unknown optimizer \"" + name +
                              "\"; expected gd or adam");
}

struct TrainOptions {
  Optimizer optimizer = Optimizer::Adam;
  double learning_rate = 0.01;
  int max_iters = 500;
  GradEngine engine = GradEngine::ParameterShift;
  // Adam moment decay and stabilizer, standard defaults.
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct TrainRecord {
  int iter = 0;
  double cost = 0.0;
  double grad_norm_sq = 0.0;
};

struct TrainResult {
  std::vector<TrainRecord> history;  // max_iters + 1 rows, iteration 0 first
  ParamMatrix final_params;
  double final_cost = 0.0;
};

// Full-batch minimization of <psi(theta)|O|psi(theta)>. Records cost and
// squared gradient norm at the initial point and after every update, so the
// history always holds max_iters + 1 rows.
inline TrainResult run_training(const CircuitSpec& spec, const Observable& obs,
                                const InitStrategy& strategy,
                                std::uint64_t seed, const TrainOptions& opt) {
  if (opt.learning_rate <= 0.0) {
    throw std::invalid_argument("run_training: learning_rate must be > 0");
  }
  if (opt.max_iters < 0) {
    throw std::invalid_argument("run_training: max_iters must be >= 0");
  }
  ParamMatrix params = sample_params(strategy, seed);
  const std::size_t dim = params.values.size();
  std::vector<double> m(dim, 0.0), v(dim, 0.0);

  TrainResult result;
  result.history.reserve(static_cast<std::size_t>(opt.max_iters) + 1);

  for (int iter = 0;; ++iter) {
    GradReport rep = gradient(spec, obs, params, opt.engine);
    if (!std::isfinite(rep.cost)) {
      throw std::runtime_error("run_training: cost diverged at iteration " +
                               std::to_string(iter));
    }
    result.history.push_back(TrainRecord{iter, rep.cost, rep.norm_sq});
    if (iter == opt.max_iters) {
      result.final_params = params;
      result.final_cost = rep.cost;
      break;
    }
    if (opt.optimizer == Optimizer::GradientDescent) {
      for (std::size_t k = 0; k < dim; ++k) {
        params.values[k] -= opt.learning_rate * rep.grad[k];
      }
    } else {
      const double t = static_cast<double>(iter) + 1.0;
      const double bc1 = 1.0 - std::pow(opt.beta1, t);
      const double bc2 = 1.0 - std::pow(opt.beta2, t);
      for (std::size_t k = 0; k < dim; ++k) {
        const double g = rep.grad[k];
        m[k] = opt.beta1 * m[k] + (1.0 - opt.beta1) * g;
        v[k] = opt.beta2 * v[k] + (1.0 - opt.beta2) * g * g;
        const double m_hat = m[k] / bc1;
        const double v_hat = v[k] / bc2;
        params.values[k] -=
            opt.learning_rate * m_hat / (std::sqrt(v_hat) + opt.epsilon);
      }
    }
  }
  return result;
}

inline void write_training_csv(std::ostream& os,
                               const std::vector<TrainRecord>& history) {
  os << "iter,cost,grad_norm_sq\n";
  char buf[80];
  for (const TrainRecord& rec : history) {
    std::snprintf(buf, sizeof(buf), "%d,%.12g,%.12g\n", rec.iter, rec.cost,
                  rec.grad_norm_sq);
    os << buf;
  }
}

}  // namespace gmmvqc

#endif  // GMMVQC_TRAIN_HPP_
