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

#include "lindbrand/decoherence.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lindbrand/parallel.hpp"
#include "lindbrand/stats.hpp"

namespace lindbrand {

double decoherence_rate(const LindbladModel& model, const DensityMatrix& rho0) {
  model.validate();
  if (rho0.dim() != model.dim) {
    throw std::invalid_argument("decoherence_rate: state dimension mismatch");
  }
  const ComplexMatrix& rho = rho0.matrix();
  const double p0 = rho0.purity();
  double acc = 0.0;
  for (std::size_t a = 0; a < model.jump_operators.size(); ++a) {
    const ComplexMatrix& l = model.jump_operators[a];
    const double gamma = model.damping_rates[a];
    // tr(rho^2 L^dag L) = |L rho|_F^2 and
    // tr(rho L^dag rho L) = <L rho, rho L>_F for Hermitian rho.
    const ComplexMatrix l_rho = l * rho;
    const ComplexMatrix rho_l = rho * l;
    const double gain = l_rho.squaredNorm();
    const double exchange = (l_rho.conjugate().cwiseProduct(rho_l)).sum().real();
    acc += gamma * (gain - exchange);
  }
  return 2.0 * acc / p0;
}

double decoherence_rate_family(const ComplexMatrix& jump, double gamma,
                               const ComplexVector& psi, double p0) {
  if (jump.rows() != jump.cols()) {
    throw std::invalid_argument("decoherence_rate_family: jump operator must be square");
  }
  if (jump.rows() != psi.size()) {
    throw std::invalid_argument("decoherence_rate_family: state dimension mismatch");
  }
  if (!(gamma >= 0.0)) {
    throw std::invalid_argument("decoherence_rate_family: gamma must be >= 0");
  }
  const int n = static_cast<int>(psi.size());
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("decoherence_rate_family: zero state");
  const ComplexVector unit = psi / norm;

  // rho = (1-p)/N I + p |psi><psi| => with c = (1-p)/N,
  //   tr(rho^2 L^dag L) - tr(rho L^dag rho L)
  //     = (c p + p^2) |L psi|^2 - c p |L^dag psi|^2 - p^2 |<psi|L|psi>|^2.
  const double p = purity_family_weight(n, p0);
  const double c = (1.0 - p) / static_cast<double>(n);
  const ComplexVector u = jump * unit;
  const ComplexVector v = jump.adjoint() * unit;
  const complexd diag = unit.dot(u);  // <psi|L|psi>
  const double num = (c * p + p * p) * u.squaredNorm() - c * p * v.squaredNorm() -
                     p * p * std::norm(diag);
  return 2.0 * gamma * num / p0;
}

double rate_shift_deviation(const ComplexMatrix& jump, double gamma,
                            const DensityMatrix& rho0, complexd shift) {
  const int n = static_cast<int>(jump.rows());
  LindbladModel model;
  model.dim = n;
  model.jump_operators = {jump};
  model.damping_rates = {gamma};
  const double d_base = decoherence_rate(model, rho0);
  model.jump_operators[0] =
      jump + shift * ComplexMatrix::Identity(n, n);
  const double d_shifted = decoherence_rate(model, rho0);
  return std::abs(d_base - d_shifted);
}

namespace {

RateEstimate reduce_rates(const std::vector<double>& rates) {
  RunningStat stat;
  for (double r : rates) stat.add(r);
  RateEstimate est;
  est.mean = stat.mean();
  est.std_error = rates.size() >= 2 ? stat.std_error() : 0.0;
  est.n_realizations = rates.size();
  return est;
}

}  // namespace

RateEstimate mc_average_rate(const AnyEnsembleSpec& ensemble, const PurityPolicy& policy,
                             std::size_t n_realizations, double gamma_total,
                             const SeedSpec& stream, int n_workers) {
  validate(ensemble);
  if (n_realizations == 0) {
    throw std::invalid_argument("mc_average_rate: needs >= 1 realization");
  }
  if (!(gamma_total > 0.0)) {
    throw std::invalid_argument("mc_average_rate: gamma_total must be > 0");
  }
  if (policy.kind == PurityPolicy::Kind::fixed) {
    const int n = dimension(ensemble);
    if (policy.value < 1.0 / static_cast<double>(n) - 1e-12 || policy.value > 1.0 + 1e-12) {
      throw std::invalid_argument("mc_average_rate: fixed purity outside [1/N, 1]");
    }
  }
  const int dim = dimension(ensemble);
  std::vector<double> rates(n_realizations);
  // Realization k draws, in order, the jump operator, the Haar direction,
  // and (for the uniform policy) the purity -- all from substream k, so the
  // estimate is independent of scheduling.
  parallel_for(n_realizations, resolve_worker_count(n_workers), [&](std::size_t k) {
    RandomStream local(substream(stream, k));
    const ComplexMatrix l = sample(ensemble, local);
    const ComplexVector psi = sample_haar_pure_state(dim, local);
    double p0 = 1.0;
    switch (policy.kind) {
      case PurityPolicy::Kind::pure: p0 = 1.0; break;
      case PurityPolicy::Kind::fixed: p0 = policy.value; break;
      case PurityPolicy::Kind::uniform: p0 = draw_uniform_purity(dim, local); break;
    }
    rates[k] = decoherence_rate_family(l, gamma_total, psi, p0);
  });
  return reduce_rates(rates);
}

RateEstimate mc_average_rate(const AnyEnsembleSpec& ensemble, const DensityMatrix& rho0,
                             std::size_t n_realizations, double gamma_total,
                             const SeedSpec& stream, int n_workers) {
  validate(ensemble);
  if (rho0.dim() != dimension(ensemble)) {
    throw std::invalid_argument("mc_average_rate: state dimension mismatch");
  }
  if (n_realizations == 0) {
    throw std::invalid_argument("mc_average_rate: needs >= 1 realization");
  }
  if (!(gamma_total > 0.0)) {
    throw std::invalid_argument("mc_average_rate: gamma_total must be > 0");
  }
  std::vector<double> rates(n_realizations);
  parallel_for(n_realizations, resolve_worker_count(n_workers), [&](std::size_t k) {
    RandomStream local(substream(stream, k));
    LindbladModel model;
    model.dim = rho0.dim();
    model.jump_operators = {sample(ensemble, local)};
    model.damping_rates = {gamma_total};
    rates[k] = decoherence_rate(model, rho0);
  });
  return reduce_rates(rates);
}

double analytic_rate_limit(RateFamily family, int dim, double gamma_sigma_sq) {
  if (dim < 3) {
    throw std::domain_error("analytic_rate_limit: requires dim >= 3");
  }
  if (!(gamma_sigma_sq > 0.0)) {
    throw std::invalid_argument("analytic_rate_limit: gamma_sigma_sq must be > 0");
  }
  const double n = static_cast<double>(dim);
  switch (family) {
    case RateFamily::wigner_dyson:
      return 2.0 * gamma_sigma_sq *
             (n - 2.0 + std::numbers::pi * std::numbers::pi / 12.0);
    case RateFamily::ginibre:
      return 2.0 * gamma_sigma_sq * (n * n - 2.0) / (n + 1.0);
  }
  throw std::invalid_argument("analytic_rate_limit: unknown family");
}

double rate_scale_coefficient(RateFamily family, int dim) {
  if (dim < 2) {
    throw std::domain_error("rate_scale_coefficient: requires dim >= 2");
  }
  const double n = static_cast<double>(dim);
  switch (family) {
    case RateFamily::wigner_dyson:
      return 2.0 + (std::numbers::pi * std::numbers::pi / 6.0 - 2.0) / n;
    case RateFamily::ginibre:
      return 2.0 - 2.0 / (n * n - 1.0);
  }
  throw std::invalid_argument("rate_scale_coefficient: unknown family");
}

double analytic_average_rate(RateFamily family, int dim, double gamma_sigma_sq, double p0) {
  if (!(gamma_sigma_sq > 0.0)) {
    throw std::invalid_argument("analytic_average_rate: gamma_sigma_sq must be > 0");
  }
  const double n = static_cast<double>(dim);
  if (p0 < 1.0 / n - 1e-12 || p0 > 1.0 + 1e-12) {
    throw std::invalid_argument("analytic_average_rate: purity outside [1/N, 1]");
  }
  const double a = rate_scale_coefficient(family, dim);
  return gamma_sigma_sq * a * (n - 1.0 / p0);
}

}  // namespace lindbrand
