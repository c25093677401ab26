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

#include <optional>
#include <vector>

#include "lindbrand/numerics.hpp"
#include "lindbrand/states.hpp"

// Markovian open-system dynamics in GKSL (Lindblad) form:
//
//   d rho / dt = -i [H, rho]
//              + sum_a gamma_a ( L_a rho L_a^dagger
//                                - 1/2 { L_a^dagger L_a, rho } ).
//
// Time is measured in units where hbar = 1; gamma_a >= 0 are damping rates.

namespace lindbrand {

struct LindbladModel {
  int dim = 2;
  std::vector<ComplexMatrix> jump_operators;
  std::vector<double> damping_rates;          // one per jump operator
  std::optional<ComplexMatrix> hamiltonian;   // omitted => H = 0

  // Throws std::invalid_argument on shape mismatches, missing jump
  // operators, negative rates, or a non-Hermitian Hamiltonian.
  void validate() const;

  // Sum of the damping rates.
  double total_damping() const;
};

// Applies the generator once: returns d rho / dt for the given rho.
ComplexMatrix apply_generator(const LindbladModel& model, const ComplexMatrix& rho);

// Dense dim^2 x dim^2 matrix S of the generator acting on column-stacked
// matrices, vec(rho) with column-major stacking:
//   S = sum_a gamma_a [ conj(L_a) (x) L_a
//                       - 1/2 ( I (x) L_a^dagger L_a
//                               + (L_a^dagger L_a)^T (x) I ) ]
//       + i ( H^T (x) I - I (x) H ).
ComplexMatrix build_superoperator(const LindbladModel& model);

// Propagates rho0 to each requested time (ascending, >= 0) by integrating
// the vectorized generator, assembled once per call.  Each output is
// revalidated as a density matrix with a PSD tolerance loosened to 1e-6 to
// absorb integrator error; a worse violation raises numerical_error (it
// signals a genuinely failed integration, not roundoff).
std::vector<DensityMatrix> propagate(const LindbladModel& model, const DensityMatrix& rho0,
                                     const std::vector<double>& times,
                                     const OdeOptions& options = {});

// Purity tr(rho(t)^2) along the trajectory; same grid contract as propagate.
std::vector<double> purity_trajectory(const LindbladModel& model, const DensityMatrix& rho0,
                                      const std::vector<double>& times,
                                      const OdeOptions& options = {});

// Single-exponential purity model
//     P(t) = (P0 - P_inf) * exp(-rate * t) + P_inf
// compared pointwise against a measured trajectory.  Returns the relative
// deviations |model - data| / data and their maximum.
struct PurityAnsatzFit {
  std::vector<double> rel_deviations;
  double max_rel_deviation = 0.0;
};
PurityAnsatzFit compare_purity_ansatz(const std::vector<double>& purities, double p0,
                                      double p_inf, double rate,
                                      const std::vector<double>& times);

}  // namespace lindbrand
