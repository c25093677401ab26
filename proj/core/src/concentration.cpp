// Copyright 2026 The lindbrand Authors.
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

#include "lindbrand/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lindbrand/decoherence.hpp"
#include "lindbrand/parallel.hpp"
#include "lindbrand/states.hpp"
#include "lindbrand/stats.hpp"

namespace lindbrand {

double RateDistributionModel::upper_bound() const {
  return a_tilde * (static_cast<double>(dim) - 1.0);
}

RateDistributionModel make_rate_distribution(RateFamily family, int dim,
                                             double gamma_sigma_sq) {
  if (dim < 2) {
    throw std::domain_error("make_rate_distribution: requires dim >= 2");
  }
  if (!(gamma_sigma_sq > 0.0)) {
    throw std::invalid_argument("make_rate_distribution: gamma_sigma_sq must be > 0");
  }
  RateDistributionModel model;
  model.family = family;
  model.dim = dim;
  model.a_tilde = gamma_sigma_sq * rate_scale_coefficient(family, dim);
  return model;
}

double cdf(const RateDistributionModel& model, double d) {
  const double n = static_cast<double>(model.dim);
  const double top = model.upper_bound();
  if (d <= 0.0) return 0.0;
  if (d >= top) return 1.0;
  return d / ((n - 1.0) * (model.a_tilde * n - d));
}

double pdf(const RateDistributionModel& model, double d) {
  const double n = static_cast<double>(model.dim);
  const double top = model.upper_bound();
  if (d <= 0.0 || d >= top) return 0.0;
  const double den = model.a_tilde * n - d;
  return model.a_tilde * n / ((n - 1.0) * den * den);
}

double hyp2f1_special(int k, double z) {
  if (k < 0) throw std::invalid_argument("hyp2f1_special: k must be >= 0");
  if (!(z > 0.0 && z < 1.0)) {
    throw std::domain_error("hyp2f1_special: z must be in (0, 1)");
  }
  // 2F1(1, k+1; k+2; z) = (k+1) z^-(k+1) [ -log(1-z) - sum_{m=1..k} z^m/m ].
  // The bracket subtracts the first k terms of -log(1-z)'s series, so for
  // small z both factors are evaluated from the series tail directly to
  // avoid catastrophic cancellation.
  const double kp1 = static_cast<double>(k + 1);
  if (z < 0.5) {
    // Tail sum_{m=k+1..inf} z^m/m, scaled by (k+1) z^-(k+1).
    double total = 0.0;
    double term = 1.0;  // will hold z^(m-k-1) progressively
    for (int m = k + 1; m < k + 1 + 200; ++m) {
      const double contribution = kp1 * term / static_cast<double>(m);
      total += contribution;
      if (contribution < 1e-17 * total) break;
      term *= z;
    }
    return total;
  }
  double bracket = -std::log1p(-z);
  double zp = 1.0;
  for (int m = 1; m <= k; ++m) {
    zp *= z;
    bracket -= zp / static_cast<double>(m);
  }
  return kp1 * std::pow(z, -(kp1)) * bracket;
}

double moment(const RateDistributionModel& model, int k) {
  if (k < 1 || k > 8) {
    throw std::invalid_argument("moment: k must be in 1..8");
  }
  const double n = static_cast<double>(model.dim);
  const double z = (n - 1.0) / n;
  const double kd = static_cast<double>(k);
  const double hyp = hyp2f1_special(k, z);
  const double scale = std::pow(model.a_tilde * (n - 1.0), kd);
  return scale * (1.0 - kd / (n * (1.0 + kd)) * hyp);
}

double Cumulants::skewness() const { return k3 / std::pow(k2, 1.5); }

double Cumulants::excess_kurtosis() const { return k4 / (k2 * k2); }

Cumulants cumulants(const RateDistributionModel& model) {
  const double n = static_cast<double>(model.dim);
  const double at = model.a_tilde;
  const double ln = std::log(n);
  const double nm1 = n - 1.0;
  Cumulants c;
  c.k1 = at * n * (1.0 - ln / nm1);
  c.k2 = at * at * n * (1.0 - n * ln * ln / (nm1 * nm1));
  c.k3 = -0.5 * std::pow(at, 3) * n *
         ((n + 1.0) - 6.0 * n * ln / nm1 + 4.0 * n * n * std::pow(ln, 3) / std::pow(nm1, 3));
  c.k4 = std::pow(at, 4) * n / 3.0 *
         (1.0 + n * (n - 8.0) - 6.0 * n * (n + 1.0) * ln / nm1 +
          36.0 * n * n * ln * ln / (nm1 * nm1) -
          18.0 * std::pow(n, 3) * std::pow(ln, 4) / std::pow(nm1, 4));
  return c;
}

std::vector<double> sample_rate_distribution(const EnsembleSpec& ensemble,
                                             std::size_t n_states,
                                             std::size_t n_realizations_per_state,
                                             double gamma_total, const SeedSpec& stream,
                                             int n_workers) {
  ensemble.validate();
  if (n_states == 0 || n_realizations_per_state == 0) {
    throw std::invalid_argument("sample_rate_distribution: needs >= 1 state and realization");
  }
  if (!(gamma_total > 0.0)) {
    throw std::invalid_argument("sample_rate_distribution: gamma_total must be > 0");
  }
  const int dim = ensemble.dim;
  std::vector<double> means(n_states);
  // State s owns substream s: first the state draw (direction + purity),
  // then one child substream per ensemble realization.
  parallel_for(n_states, resolve_worker_count(n_workers), [&](std::size_t s) {
    RandomStream state_stream(substream(stream, s));
    const ComplexVector psi = sample_haar_pure_state(dim, state_stream);
    const double p0 = draw_uniform_purity(dim, state_stream);
    RunningStat stat;
    for (std::size_t r = 0; r < n_realizations_per_state; ++r) {
      RandomStream real_stream = state_stream.substream(r);
      const ComplexMatrix l = sample(ensemble, real_stream);
      stat.add(decoherence_rate_family(l, gamma_total, psi, p0));
    }
    means[s] = stat.mean();
  });
  std::sort(means.begin(), means.end());
  return means;
}

std::vector<double> analytic_rate_samples(const RateDistributionModel& model,
                                          std::size_t n_states, const SeedSpec& stream) {
  if (n_states == 0) {
    throw std::invalid_argument("analytic_rate_samples: needs >= 1 state");
  }
  const double n = static_cast<double>(model.dim);
  std::vector<double> out(n_states);
  RandomStream local(stream);
  for (std::size_t s = 0; s < n_states; ++s) {
    const double p0 = draw_uniform_purity(model.dim, local);
    out[s] = model.a_tilde * (n - 1.0 / p0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lindbrand
