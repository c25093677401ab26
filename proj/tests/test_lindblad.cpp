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
#include "lindbrand/numerics.hpp"
#include "lindbrand/rng.hpp"
#include "lindbrand/states.hpp"

using namespace lindbrand;

namespace {

// vec with column-major stacking, matching the superoperator convention.
ComplexVector vec(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

LindbladModel random_model(int dim, int n_jumps, bool with_hamiltonian,
                           RandomStream& stream) {
  LindbladModel model;
  model.dim = dim;
  const EnsembleSpec spec{EnsembleKind::ginibre_complex, dim, 1.0};
  for (int a = 0; a < n_jumps; ++a) {
    model.jump_operators.push_back(sample(spec, stream));
    model.damping_rates.push_back(0.1 + stream.uniform());
  }
  if (with_hamiltonian) {
    model.hamiltonian = sample(EnsembleSpec{EnsembleKind::unitary, dim, 1.0}, stream);
  }
  return model;
}

}  // namespace

TEST_CASE("validate rejects malformed models") {
  LindbladModel model;
  model.dim = 3;
  CHECK_THROWS_AS(model.validate(), std::invalid_argument);  // no jump operators

  model.jump_operators.push_back(ComplexMatrix::Identity(3, 3));
  CHECK_THROWS_AS(model.validate(), std::invalid_argument);  // missing rate

  model.damping_rates.push_back(-1.0);
  CHECK_THROWS_AS(model.validate(), std::invalid_argument);  // negative rate

  model.damping_rates[0] = 1.0;
  CHECK_NOTHROW(model.validate());
  CHECK(model.total_damping() == doctest::Approx(1.0));

  model.jump_operators[0] = ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(model.validate(), std::invalid_argument);  // shape mismatch

  model.jump_operators[0] = ComplexMatrix::Identity(3, 3);
  ComplexMatrix h(3, 3);
  h.setZero();
  h(0, 1) = complexd(0.0, 1.0);  // not Hermitian
  model.hamiltonian = h;
  CHECK_THROWS_AS(model.validate(), std::invalid_argument);
}

TEST_CASE("build_superoperator agrees with apply_generator on random inputs") {
  RandomStream stream(SeedSpec{20260814, 11});
  for (int trial = 0; trial < 3; ++trial) {
    const int dim = 4;
    const LindbladModel model = random_model(dim, 2, /*with_hamiltonian=*/true, stream);
    const ComplexMatrix s = build_superoperator(model);
    REQUIRE(s.rows() == dim * dim);

    // Compare S * vec(rho) with vec(generator(rho)) on a random Hermitian rho.
    const ComplexVector psi = sample_haar_pure_state(dim, stream);
    const DensityMatrix rho = purity_family(psi, 0.6);
    const ComplexVector lhs = s * vec(rho.matrix());
    const ComplexVector rhs = vec(apply_generator(model, rho.matrix()));
    CHECK((lhs - rhs).norm() < 1e-12 * std::max(1.0, rhs.norm()));
  }
}

TEST_CASE("generator output is traceless and Hermitian for Hermitian input") {
  RandomStream stream(SeedSpec{17, 0});
  const LindbladModel model = random_model(5, 3, /*with_hamiltonian=*/true, stream);
  const ComplexVector psi = sample_haar_pure_state(5, stream);
  const DensityMatrix rho = purity_family(psi, 0.4);
  const ComplexMatrix drho = apply_generator(model, rho.matrix());
  CHECK(std::abs(trace(drho)) < 1e-12);
  CHECK((drho - drho.adjoint().eval()).norm() < 1e-12);
}

TEST_CASE("qubit dephasing: purity relaxes as 1/2 + e^{-4 gamma t} / 2") {
  // L = sigma_z, gamma = 1, rho0 = |+><+|.  The coherence amplitude decays
  // at rate 2 gamma, its square at 4 gamma, so P(t) = 1/2 + exp(-4 t)/2
  // exactly.
  LindbladModel model;
  model.dim = 2;
  ComplexMatrix sz(2, 2);
  sz << 1.0, 0.0, 0.0, -1.0;
  model.jump_operators = {sz};
  model.damping_rates = {1.0};

  ComplexVector plus(2);
  plus << 1.0, 1.0;
  const DensityMatrix rho0 = pure_state(plus);

  const std::vector<double> times = {0.0, 0.1, 0.5, 1.0};
  const std::vector<double> purities = purity_trajectory(model, rho0, times);
  REQUIRE(purities.size() == times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double expected = 0.5 + 0.5 * std::exp(-4.0 * times[i]);
    CHECK(std::abs(purities[i] - expected) < 1e-8);
  }

  // The states themselves: off-diagonals carry exp(-2t)/2.
  const auto states = propagate(model, rho0, times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(std::abs(states[i].matrix()(0, 1).real() - 0.5 * std::exp(-2.0 * times[i])) <
          1e-8);
    CHECK(states[i].matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-9));
  }
}

TEST_CASE("propagate preserves trace and Hermiticity for generic models") {
  RandomStream stream(SeedSpec{20260814, 13});
  const int dim = 6;
  const LindbladModel model = random_model(dim, 2, /*with_hamiltonian=*/true, stream);
  const ComplexVector psi = sample_haar_pure_state(dim, stream);
  const DensityMatrix rho0 = purity_family(psi, 0.9);
  const std::vector<double> times = {0.02, 0.1, 0.3};
  const auto states = propagate(model, rho0, times);
  for (const DensityMatrix& rho : states) {
    CHECK(std::abs(trace(rho.matrix()) - complexd(1.0, 0.0)) < 1e-9);
    CHECK(hermiticity_defect(rho.matrix()) < 1e-10);
    CHECK(rho.purity() <= 1.0 + 1e-9);
    CHECK(rho.purity() >= 1.0 / dim - 1e-9);
  }
}

TEST_CASE("single Hermitian dephasing operator: purity plateau is sum_i rho_ii^2"
          " in the eigenbasis") {
  // For one Hermitian jump operator L with nondegenerate spectrum and H = 0,
  // the dynamics dephase in the eigenbasis of L: diagonal entries of rho (in
  // that basis) are conserved, off-diagonals decay.  The t -> infinity purity
  // is exactly sum_i rho_ii^2 -- an exact oracle for the long-time limit.
  const int dim = 5;
  RandomStream stream(SeedSpec{20260814, 14});
  ComplexMatrix l = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) l(i, i) = 0.5 * i - 1.0;  // distinct eigenvalues

  LindbladModel model;
  model.dim = dim;
  model.jump_operators = {l};
  model.damping_rates = {1.0};

  const ComplexVector psi = sample_haar_pure_state(dim, stream);
  const DensityMatrix rho0 = purity_family(psi, 0.8);
  double plateau = 0.0;
  for (int i = 0; i < dim; ++i) plateau += std::norm(rho0.matrix()(i, i));

  // The slowest coherence decays at rate min_{i != j} (l_i - l_j)^2 = 0.25;
  // t = 60 suppresses it to exp(-15) ~ 3e-7.
  const std::vector<double> purities = purity_trajectory(model, rho0, {60.0});
  CHECK(std::abs(purities[0] - plateau) < 1e-5);
}

TEST_CASE("multi-jump Hermitian model relaxes to the maximally mixed plateau") {
  // Hermitian jumps make the generator unital, so I/N is stationary; with
  // several independent jumps it is generically the unique stationary state
  // and the long-time purity lands on 1/N exactly.  (Non-Hermitian jumps
  // relax only to the vicinity of I/N -- their stationary state carries an
  // O(1/sqrt(n_jumps)) bias.)
  const int dim = 8;
  RandomStream stream(SeedSpec{20260814, 15});
  LindbladModel model;
  model.dim = dim;
  const EnsembleSpec spec{EnsembleKind::unitary, dim, 1.0};
  const int n_jumps = 3;
  for (int a = 0; a < n_jumps; ++a) {
    model.jump_operators.push_back(sample(spec, stream));
    model.damping_rates.push_back(1.0 / n_jumps);
  }

  const ComplexVector psi = sample_haar_pure_state(dim, stream);
  const DensityMatrix rho0 = pure_state(psi);
  const std::vector<double> purities = purity_trajectory(model, rho0, {6.0});
  CHECK(std::abs(purities[0] - 1.0 / dim) < 1e-6);
}

TEST_CASE("compare_purity_ansatz measures relative deviation from the model") {
  const std::vector<double> times = {0.0, 1.0, 2.0};
  const double p0 = 0.9;
  const double p_inf = 0.1;
  const double rate = 1.3;
  std::vector<double> purities(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    purities[i] = (p0 - p_inf) * std::exp(-rate * times[i]) + p_inf;
  }
  const PurityAnsatzFit exact = compare_purity_ansatz(purities, p0, p_inf, rate, times);
  CHECK(exact.max_rel_deviation < 1e-14);

  // Perturb one point by a known relative amount.
  purities[1] *= 1.05;
  const PurityAnsatzFit off = compare_purity_ansatz(purities, p0, p_inf, rate, times);
  CHECK(off.max_rel_deviation == doctest::Approx(0.05 / 1.05).epsilon(1e-10));
  REQUIRE(off.rel_deviations.size() == 3);
  CHECK(off.rel_deviations[0] < 1e-14);

  CHECK_THROWS_AS(compare_purity_ansatz({1.0}, 1.0, 0.5, 1.0, {0.0, 1.0}),
                  std::invalid_argument);
}
