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

#pragma once

#include <cstddef>
#include <vector>

#include "lindbrand/decoherence.hpp"
#include "lindbrand/ensembles.hpp"
#include "lindbrand/rng.hpp"

// Distribution of the ensemble-averaged decoherence rate over random initial
// states.
//
// For a uniformly random initial purity P0 ~ U[1/N, 1] and a Haar direction,
// the ensemble-mean rate conditioned on the state is
//     D(P0) = a_tilde * (N - 1/P0),   a_tilde = Gamma sigma^2 A(N),
// so D inherits a heavy-tailed law supported on [0, a_tilde (N - 1)]:
//     CDF  F(d) = d / ((N - 1)(a_tilde N - d))
//     PDF  f(d) = a_tilde N / ((N - 1)(a_tilde N - d)^2).
// Moments and cumulants have closed forms below.  The sampling helpers give
// the matching Monte-Carlo pipelines.

namespace lindbrand {

struct RateDistributionModel {
  RateFamily family = RateFamily::wigner_dyson;
  int dim = 2;
  double a_tilde = 1.0;  // Gamma sigma^2 A(N)

  // Supremum of the support, a_tilde * (N - 1).
  double upper_bound() const;
};

// Builds the model for the given family/dimension (dim >= 2) and rate unit
// gamma_sigma_sq = Gamma * sigma^2.
RateDistributionModel make_rate_distribution(RateFamily family, int dim,
                                             double gamma_sigma_sq);

// F(d): 0 below the support, 1 above it.
double cdf(const RateDistributionModel& model, double d);

// f(d): 0 outside the open support.
double pdf(const RateDistributionModel& model, double d);

// Gauss hypergeometric 2F1(1, k+1; k+2; z) for integer k >= 0, 0 < z < 1,
// via the exact logarithmic form
//   (k+1) z^-(k+1) [ -log(1-z) - sum_{m=1..k} z^m / m ].
double hyp2f1_special(int k, double z);

// E[D^k] for k in {1..8}:
//   E[D^k] = a_tilde^k (N-1)^k [ 1 - k/(N(1+k)) * 2F1(1, 1+k; 2+k; (N-1)/N) ].
double moment(const RateDistributionModel& model, int k);

// First four cumulants (closed forms in N and a_tilde) plus the derived
// shape numbers.
struct Cumulants {
  double k1 = 0.0, k2 = 0.0, k3 = 0.0, k4 = 0.0;

  double skewness() const;         // k3 / k2^(3/2)
  double excess_kurtosis() const;  // k4 / k2^2
};
Cumulants cumulants(const RateDistributionModel& model);

// Full Monte-Carlo sampler of the state-conditioned mean rate: draws
// `n_states` random initial states (Haar direction, purity ~ U[1/N, 1]) and
// for each averages the rate over `n_realizations_per_state` independent
// ensemble draws.  Returns the per-state means sorted ascending.
// Deterministic for any worker count (substream-per-state indexing).
std::vector<double> sample_rate_distribution(const EnsembleSpec& ensemble,
                                             std::size_t n_states,
                                             std::size_t n_realizations_per_state,
                                             double gamma_total, const SeedSpec& stream,
                                             int n_workers = 1);

// Infinite-realization shortcut: the same per-state means evaluated from the
// closed form D(P0) = a_tilde (N - 1/P0) at uniformly drawn purities.
// Returns a sorted sample of size n_states.
std::vector<double> analytic_rate_samples(const RateDistributionModel& model,
                                          std::size_t n_states, const SeedSpec& stream);

}  // namespace lindbrand
