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

#include "lindbrand/states.hpp"

#include <cmath>
#include <string>

namespace lindbrand {

DensityMatrix::DensityMatrix(ComplexMatrix rho, const Tolerances& tol) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() < 1) {
    throw std::invalid_argument("DensityMatrix: matrix must be square and non-empty");
  }
  const double herm = hermiticity_defect(rho_);
  if (herm > tol.hermiticity) {
    throw std::invalid_argument("DensityMatrix: not Hermitian (relative defect " +
                                std::to_string(herm) + ")");
  }
  const complexd tr = rho_.trace();
  if (std::abs(tr - complexd(1.0, 0.0)) > tol.trace) {
    throw std::invalid_argument("DensityMatrix: trace deviates from 1 by " +
                                std::to_string(std::abs(tr - complexd(1.0, 0.0))));
  }
  // Exact symmetrization so downstream algebra can rely on rho = rho^dagger
  // to the last bit.
  rho_ = 0.5 * (rho_ + rho_.adjoint().eval());
  const EigenSystem eig = eig_hermitian(rho_, /*with_vectors=*/false);
  double min_eig = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    min_eig = std::min(min_eig, eig.values[i].real());
  }
  if (min_eig < -tol.psd) {
    throw std::invalid_argument("DensityMatrix: not positive semidefinite (min eigenvalue " +
                                std::to_string(min_eig) + ")");
  }
}

double DensityMatrix::purity() const {
  // tr(rho^2) = |rho|_F^2 for Hermitian rho.
  return rho_.squaredNorm();
}

DensityMatrix pure_state(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("pure_state: zero vector");
  const ComplexVector unit = psi / norm;
  return DensityMatrix(unit * unit.adjoint());
}

DensityMatrix maximally_mixed(int dim) {
  if (dim < 1) throw std::invalid_argument("maximally_mixed: dim must be >= 1");
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double purity_family_weight(int dim, double target_purity) {
  if (dim < 1) throw std::invalid_argument("purity_family_weight: dim must be >= 1");
  const double floor = 1.0 / static_cast<double>(dim);
  if (target_purity < floor - 1e-12 || target_purity > 1.0 + 1e-12) {
    throw std::invalid_argument("purity_family_weight: target purity " +
                                std::to_string(target_purity) + " outside [1/N, 1] for N = " +
                                std::to_string(dim));
  }
  if (dim == 1) return 1.0;
  const double num = std::max(0.0, static_cast<double>(dim) * target_purity - 1.0);
  return std::sqrt(num / (static_cast<double>(dim) - 1.0));
}

DensityMatrix purity_family(const ComplexVector& psi, double target_purity) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("purity_family: zero vector");
  const int dim = static_cast<int>(psi.size());
  const double p = purity_family_weight(dim, target_purity);
  const ComplexVector unit = psi / norm;
  ComplexMatrix rho = ((1.0 - p) / static_cast<double>(dim)) *
                      ComplexMatrix::Identity(dim, dim);
  rho += p * (unit * unit.adjoint());
  return DensityMatrix(std::move(rho));
}

double draw_uniform_purity(int dim, RandomStream& stream) {
  if (dim < 1) throw std::invalid_argument("draw_uniform_purity: dim must be >= 1");
  const double floor = 1.0 / static_cast<double>(dim);
  return floor + (1.0 - floor) * stream.uniform();
}

}  // namespace lindbrand
