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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "lindbrand/decoherence.hpp"
#include "lindbrand/ensembles.hpp"
#include "lindbrand/lindblad.hpp"
#include "lindbrand/rng.hpp"
#include "lindbrand/states.hpp"

using namespace lindbrand;

namespace {

LindbladModel single_jump_model(const ComplexMatrix& jump, double gamma) {
  LindbladModel model;
  model.dim = static_cast<int>(jump.rows());
  model.jump_operators = {jump};
  model.damping_rates = {gamma};
  return model;
}

}  // namespace

TEST_CASE("decoherence rate: qubit amplitude damping from the excited state") {
  // L = |0><1| (lowering operator), rho = |1><1|, gamma arbitrary:
  //   tr(rho^2 L^dagger L) = 1, tr(rho L^dagger rho L) = 0, P0 = 1
  // so D = 2 gamma exactly.
  ComplexMatrix lower = ComplexMatrix::Zero(2, 2);
  lower(0, 1) = 1.0;
  ComplexVector excited = ComplexVector::Zero(2);
  excited[1] = 1.0;
  const DensityMatrix rho = pure_state(excited);
  for (double gamma : {1.0, 0.25, 3.0}) {
    const double d = decoherence_rate(single_jump_model(lower, gamma), rho);
    CHECK(d == doctest::Approx(2.0 * gamma).epsilon(1e-13));
    CHECK(decoherence_rate_family(lower, gamma, excited, 1.0) ==
          doctest::Approx(2.0 * gamma).epsilon(1e-13));
  }
}

TEST_CASE("the maximally mixed state does not decohere") {
  RandomStream stream(SeedSpec{20260814, 21});
  for (int dim : {4, 8}) {
    const DensityMatrix rho = maximally_mixed(dim);
    for (EnsembleKind kind : {EnsembleKind::orthogonal, EnsembleKind::ginibre_complex}) {
      const ComplexMatrix l = sample(EnsembleSpec{kind, dim, 1.0}, stream);
      const double d = decoherence_rate(single_jump_model(l, 1.0), rho);
      CHECK(std::abs(d) < 1e-12);
    }
  }
}

TEST_CASE("family fast path equals the general-path rate") {
  RandomStream stream(SeedSpec{20260814, 22});
  const int dim = 8;
  const double gamma = 0.7;
  constexpr EnsembleKind kinds[] = {
      EnsembleKind::orthogonal,      EnsembleKind::unitary,
      EnsembleKind::symplectic,      EnsembleKind::ginibre_real,
      EnsembleKind::ginibre_complex, EnsembleKind::ginibre_quaternion};
  for (EnsembleKind kind : kinds) {
    const ComplexMatrix l = sample(EnsembleSpec{kind, dim, 1.2}, stream);
    const ComplexVector psi = sample_haar_pure_state(dim, stream);
    for (double p0 : {1.0, 0.6, 1.0 / dim + 1e-3}) {
      const DensityMatrix rho = purity_family(psi, p0);
      const double general = decoherence_rate(single_jump_model(l, gamma), rho);
      const double fast = decoherence_rate_family(l, gamma, psi, p0);
      CHECK(std::abs(fast - general) <= 1e-10 * std::max(1.0, std::abs(general)));
    }
  }
}

TEST_CASE("the rate is invariant under identity shifts of the jump operator") {
  RandomStream stream(SeedSpec{20260814, 23});
  const int dim = 6;
  const ComplexMatrix l = sample(EnsembleSpec{EnsembleKind::ginibre_complex, dim, 1.0},
                                 stream);
  const ComplexVector psi = sample_haar_pure_state(dim, stream);
  const DensityMatrix rho = purity_family(psi, 0.75);
  const double base = decoherence_rate(single_jump_model(l, 1.0), rho);
  for (const complexd shift : {complexd(1.0, 0.0), complexd(0.0, -2.5), complexd(37.0, 11.0)}) {
    const double dev = rate_shift_deviation(l, 1.0, rho, shift);
    // Relative to the rate, allowing for cancellation at |shift| ~ 40.
    CHECK(dev < 1e-9 * std::max(1.0, base) * std::max(1.0, std::norm(shift)));
  }
}

TEST_CASE("closed-form rate limits: frozen values") {
  // 2 (N - 2 + pi^2/12) at N = 8 equals 12 + pi^2/6.
  CHECK(analytic_rate_limit(RateFamily::wigner_dyson, 8, 1.0) ==
        doctest::Approx(13.644934066848226).epsilon(1e-15));
  // 2 (N^2 - 2)/(N + 1) at N = 8 equals 124/9.
  CHECK(analytic_rate_limit(RateFamily::ginibre, 8, 1.0) ==
        doctest::Approx(124.0 / 9.0).epsilon(1e-15));
  // Linear in gamma * sigma^2.
  CHECK(analytic_rate_limit(RateFamily::ginibre, 8, 2.5) ==
        doctest::Approx(2.5 * 124.0 / 9.0).epsilon(1e-15));

  CHECK(rate_scale_coefficient(RateFamily::wigner_dyson, 8) ==
        doctest::Approx(1.9556167583560283).epsilon(1e-15));
  CHECK(rate_scale_coefficient(RateFamily::ginibre, 8) ==
        doctest::Approx(2.0 - 2.0 / 63.0).epsilon(1e-15));

  // <D>(P0) = Gamma sigma^2 A(N) (N - 1/P0).
  CHECK(analytic_average_rate(RateFamily::ginibre, 8, 0.5, 0.5) ==
        doctest::Approx(0.5 * (2.0 - 2.0 / 63.0) * 6.0).epsilon(1e-14));
  // At the minimal purity 1/N the mean rate vanishes.
  CHECK(analytic_average_rate(RateFamily::wigner_dyson, 8, 1.0, 1.0 / 8.0) ==
        doctest::Approx(0.0));

  CHECK_THROWS_AS(analytic_rate_limit(RateFamily::wigner_dyson, 2, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(rate_scale_coefficient(RateFamily::ginibre, 1), std::domain_error);
  CHECK_THROWS_AS(analytic_average_rate(RateFamily::ginibre, 8, 1.0, 0.05),
                  std::invalid_argument);
  CHECK_THROWS_AS(analytic_average_rate(RateFamily::ginibre, 8, -1.0, 0.5),
                  std::invalid_argument);
}

TEST_CASE("MC mean rate over pure states matches the exact ensemble mean") {
  // For every calibrated ensemble with E[tr L^dagger L] = sigma^2 N^2 and
  // E|tr L|^2 = sigma^2 N, the Haar average over pure states gives exactly
  //   <D> = 2 Gamma sigma^2 (N - 1).
  const int dim = 4;
  const std::size_t n_reals = 3000;
  const SeedSpec seed{20260814, 24};
  const AnyEnsembleSpec ensemble = EnsembleSpec{EnsembleKind::unitary, dim, 1.0};
  const RateEstimate estimate =
      mc_average_rate(ensemble, PurityPolicy::pure(), n_reals, 1.0, seed);
  CHECK(estimate.n_realizations == n_reals);
  const double exact = 2.0 * (dim - 1.0);
  CHECK(std::abs(estimate.mean - exact) < 5.0 * estimate.std_error);
}

TEST_CASE("MC mean rate at fixed sub-unit purity tracks the (N - 1/P0) law") {
  // Averaging the family rate over Haar directions gives, for any ensemble
  // with E[tr L^dagger L] = sigma^2 N^2 and E|tr L|^2 = sigma^2 N, exactly
  //   <D>(P0) = 2 Gamma sigma^2 (N - 1/P0)
  // at every admissible purity (the (N P0 - 1)/((N^2 - 1) P0) state factor
  // cancels the sigma^2 (N^2 - 1) ensemble bracket).
  const int dim = 16;
  const SeedSpec seed{20260814, 25};
  const AnyEnsembleSpec ensemble = EnsembleSpec{EnsembleKind::ginibre_complex, dim, 1.0};
  const RateEstimate estimate = mc_average_rate(
      ensemble, PurityPolicy::fixed(0.5), 3000, 1.0, seed);
  const double exact = 2.0 * (dim - 2.0);
  CHECK(std::abs(estimate.mean - exact) < 5.0 * estimate.std_error);
}

TEST_CASE("MC reductions are bit-identical across worker counts") {
  const SeedSpec seed{20260814, 26};
  const AnyEnsembleSpec ensemble = EnsembleSpec{EnsembleKind::orthogonal, 6, 1.0};
  const RateEstimate serial =
      mc_average_rate(ensemble, PurityPolicy::uniform(), 256, 1.0, seed, 1);
  const RateEstimate threaded =
      mc_average_rate(ensemble, PurityPolicy::uniform(), 256, 1.0, seed, 4);
  CHECK(serial.mean == threaded.mean);
  CHECK(serial.std_error == threaded.std_error);

  // Fixed shared state overload: same contract.
  RandomStream stream(SeedSpec{1, 1});
  const DensityMatrix rho0 = purity_family(sample_haar_pure_state(6, stream), 0.8);
  const RateEstimate s2 = mc_average_rate(ensemble, rho0, 128, 1.0, seed, 1);
  const RateEstimate t2 = mc_average_rate(ensemble, rho0, 128, 1.0, seed, 3);
  CHECK(s2.mean == t2.mean);
  CHECK(s2.std_error == t2.std_error);
}

TEST_CASE("MC estimator validates its inputs") {
  const AnyEnsembleSpec ensemble = EnsembleSpec{EnsembleKind::orthogonal, 4, 1.0};
  CHECK_THROWS_AS(
      mc_average_rate(ensemble, PurityPolicy::pure(), 0, 1.0, SeedSpec{1, 0}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      mc_average_rate(ensemble, PurityPolicy::pure(), 10, -1.0, SeedSpec{1, 0}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      mc_average_rate(ensemble, PurityPolicy::fixed(0.01), 10, 1.0, SeedSpec{1, 0}),
      std::invalid_argument);
}
