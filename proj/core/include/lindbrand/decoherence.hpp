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

#include "lindbrand/ensembles.hpp"
#include "lindbrand/lindblad.hpp"
#include "lindbrand/rng.hpp"
#include "lindbrand/states.hpp"

// The instantaneous decoherence rate of a GKSL model at state rho,
//
//   D = -(d/dt) tr(rho^2) / tr(rho^2)
//     = (2 / P0) * sum_a gamma_a [ tr(rho^2 L_a^dagger L_a)
//                                  - tr(rho L_a^dagger rho L_a) ],
//
// i.e. the initial logarithmic purity-decay rate (the Hamiltonian commutator
// drops out of d tr(rho^2)/dt).  D is invariant under the shift
// L -> L + c * I of any jump operator.
//
// Units: with jump operators scaled by sigma and rates summing to Gamma,
// rates are reported in Gamma * sigma^2.

namespace lindbrand {

// Exact rate at rho0 for an arbitrary model (O(n_jumps * N^3)).
double decoherence_rate(const LindbladModel& model, const DensityMatrix& rho0);

// Fast path, O(N^2), for the interpolation family
// rho = (1-p)/N I + p |psi><psi| with purity p0 (psi need not be normalized;
// it is normalized internally).  Algebraically identical to
// decoherence_rate on purity_family(psi, p0); single jump operator L with
// rate gamma.
double decoherence_rate_family(const ComplexMatrix& jump, double gamma,
                               const ComplexVector& psi, double p0);

// |D(L) - D(L + shift * I)| evaluated with the general-path formula; used to
// probe the shift invariance at finite precision (the identity component of
// a jump operator is pure gauge).
double rate_shift_deviation(const ComplexMatrix& jump, double gamma,
                            const DensityMatrix& rho0, complexd shift);

// How mc_average_rate draws the initial state for each realization:
//   * pure     -- Haar-random pure state (purity 1);
//   * fixed    -- Haar-random direction, fixed purity `value`;
//   * uniform  -- Haar-random direction, purity ~ Uniform[1/N, 1].
struct PurityPolicy {
  enum class Kind { pure, fixed, uniform };
  Kind kind = Kind::pure;
  double value = 1.0;

  static PurityPolicy pure() { return {Kind::pure, 1.0}; }
  static PurityPolicy fixed(double p0) { return {Kind::fixed, p0}; }
  static PurityPolicy uniform() { return {Kind::uniform, 1.0}; }
};

struct RateEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n_realizations = 0;
};

// Monte-Carlo mean decoherence rate over `n_realizations` independent draws
// (jump operator ~ `ensemble`, initial state per `policy`, total damping
// gamma_total on a single jump operator per realization).  Realization k
// consumes substream(stream, k) only, and the reduction runs in index
// order, so the result is bit-identical for any worker count; n_workers <= 0
// resolves to the LINDBRAND_WORKERS environment variable or the hardware
// concurrency.
RateEstimate mc_average_rate(const AnyEnsembleSpec& ensemble, const PurityPolicy& policy,
                             std::size_t n_realizations, double gamma_total,
                             const SeedSpec& stream, int n_workers = 1);

// Same estimator with one shared, caller-supplied initial state.
RateEstimate mc_average_rate(const AnyEnsembleSpec& ensemble, const DensityMatrix& rho0,
                             std::size_t n_realizations, double gamma_total,
                             const SeedSpec& stream, int n_workers = 1);

// The two closed-form families: the Hermitian Wigner-Dyson classes share one
// large-N rate formula, the Ginibre classes another.
enum class RateFamily { wigner_dyson, ginibre };

// Large-N ensemble-mean rate for a pure initial state, in units of
// gamma_sigma_sq = Gamma * sigma^2:
//   wigner_dyson: 2 (N - 2 + pi^2/12)
//   ginibre:      2 (N^2 - 2) / (N + 1)
// Domain: dim >= 3 (std::domain_error below).
double analytic_rate_limit(RateFamily family, int dim, double gamma_sigma_sq);

// Finite-N coefficient A(N) in the purity-resolved mean rate
//   <D>(P0) = Gamma sigma^2 A(N) (N - 1/P0):
//   wigner_dyson: A = 2 + (pi^2/6 - 2)/N
//   ginibre:      A = 2 - 2/(N^2 - 1)
// Domain: dim >= 2.
double rate_scale_coefficient(RateFamily family, int dim);

// <D>(P0) = Gamma sigma^2 A(N) (N - 1/P0); requires P0 in [1/N, 1].
double analytic_average_rate(RateFamily family, int dim, double gamma_sigma_sq, double p0);

}  // namespace lindbrand
