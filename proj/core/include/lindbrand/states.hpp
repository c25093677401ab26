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

#include "lindbrand/numerics.hpp"
#include "lindbrand/rng.hpp"

namespace lindbrand {

// A validated density matrix: Hermitian, unit trace, positive semidefinite.
// Validation tolerances (relative Hermiticity defect, |tr - 1|, and the
// allowed negative-eigenvalue excursion) are parameters with defaults tight
// enough for exact constructions; the time propagator revalidates its
// output with a looser PSD floor to absorb integrator error.
class DensityMatrix {
 public:
  struct Tolerances {
    double hermiticity = 1e-10;
    double trace = 1e-10;
    double psd = 1e-10;  // eigenvalues >= -psd * max(1, |rho|_F)
  };

  // Throws std::invalid_argument when `rho` violates any tolerance.
  explicit DensityMatrix(ComplexMatrix rho) : DensityMatrix(std::move(rho), Tolerances{}) {}
  DensityMatrix(ComplexMatrix rho, const Tolerances& tol);

  const ComplexMatrix& matrix() const { return rho_; }
  int dim() const { return static_cast<int>(rho_.rows()); }

  // tr(rho^2) in [1/dim, 1] (up to validation tolerance).
  double purity() const;

 private:
  ComplexMatrix rho_;
};

// Rank-one projector |psi><psi| from a nonzero vector (normalized first).
DensityMatrix pure_state(const ComplexVector& psi);

// Identity / dim.
DensityMatrix maximally_mixed(int dim);

// The interpolation family
//     rho = (1 - p)/N * I + p * |psi><psi|,   p in [0, 1],
// solved for the p that achieves purity target_purity = tr(rho^2):
//     p = sqrt((N * target_purity - 1) / (N - 1)).
// Preconditions: |psi| > 0, target_purity in [1/N, 1].  For N = 1 the only
// admissible target is 1.
DensityMatrix purity_family(const ComplexVector& psi, double target_purity);

// The p parameter above (exposed for closed-form cross-checks).
double purity_family_weight(int dim, double target_purity);

// Uniform purity draw on [1/N, 1] (the convention for "random initial
// states" when no purity is pinned).
double draw_uniform_purity(int dim, RandomStream& stream);

}  // namespace lindbrand
