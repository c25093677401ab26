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

#include "lindbrand/lindblad.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace lindbrand {

void LindbladModel::validate() const {
  if (dim < 1) throw std::invalid_argument("LindbladModel: dim must be >= 1");
  if (jump_operators.empty()) {
    throw std::invalid_argument("LindbladModel: needs at least one jump operator");
  }
  if (jump_operators.size() != damping_rates.size()) {
    throw std::invalid_argument("LindbladModel: " + std::to_string(jump_operators.size()) +
                                " jump operators but " + std::to_string(damping_rates.size()) +
                                " damping rates");
  }
  for (std::size_t a = 0; a < jump_operators.size(); ++a) {
    if (jump_operators[a].rows() != dim || jump_operators[a].cols() != dim) {
      throw std::invalid_argument("LindbladModel: jump operator " + std::to_string(a) +
                                  " is not " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    if (!(damping_rates[a] >= 0.0)) {
      throw std::invalid_argument("LindbladModel: damping rate " + std::to_string(a) +
                                  " must be >= 0");
    }
  }
  if (hamiltonian.has_value()) {
    if (hamiltonian->rows() != dim || hamiltonian->cols() != dim) {
      throw std::invalid_argument("LindbladModel: Hamiltonian shape mismatch");
    }
    const double defect = hermiticity_defect(*hamiltonian);
    if (defect > 1e-10) {
      throw std::invalid_argument("LindbladModel: Hamiltonian not Hermitian (defect " +
                                  std::to_string(defect) + ")");
    }
  }
}

double LindbladModel::total_damping() const {
  double total = 0.0;
  for (double g : damping_rates) total += g;
  return total;
}

ComplexMatrix apply_generator(const LindbladModel& model, const ComplexMatrix& rho) {
  model.validate();
  if (rho.rows() != model.dim || rho.cols() != model.dim) {
    throw std::invalid_argument("apply_generator: state shape mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(model.dim, model.dim);
  for (std::size_t a = 0; a < model.jump_operators.size(); ++a) {
    const ComplexMatrix& l = model.jump_operators[a];
    const double gamma = model.damping_rates[a];
    const ComplexMatrix l_rho = l * rho;
    const ComplexMatrix ldl = l.adjoint() * l;
    out += gamma * (l_rho * l.adjoint() - 0.5 * (ldl * rho + rho * ldl));
  }
  if (model.hamiltonian.has_value()) {
    const ComplexMatrix& h = *model.hamiltonian;
    out += complexd(0.0, -1.0) * (h * rho - rho * h);
  }
  return out;
}

ComplexMatrix build_superoperator(const LindbladModel& model) {
  model.validate();
  const int n = model.dim;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix s = ComplexMatrix::Zero(n * n, n * n);
  // Column-major stacking: vec(A X B) = (B^T (x) A) vec(X).
  for (std::size_t a = 0; a < model.jump_operators.size(); ++a) {
    const ComplexMatrix& l = model.jump_operators[a];
    const double gamma = model.damping_rates[a];
    const ComplexMatrix ldl = l.adjoint() * l;
    s += gamma * (Eigen::kroneckerProduct(l.conjugate(), l).eval() -
                  0.5 * (Eigen::kroneckerProduct(id, ldl).eval() +
                         Eigen::kroneckerProduct(ldl.transpose(), id).eval()));
  }
  if (model.hamiltonian.has_value()) {
    const ComplexMatrix& h = *model.hamiltonian;
    s += complexd(0.0, 1.0) * (Eigen::kroneckerProduct(h.transpose(), id).eval() -
                               Eigen::kroneckerProduct(id, h).eval());
  }
  return s;
}

std::vector<DensityMatrix> propagate(const LindbladModel& model, const DensityMatrix& rho0,
                                     const std::vector<double>& times,
                                     const OdeOptions& options) {
  model.validate();
  if (rho0.dim() != model.dim) {
    throw std::invalid_argument("propagate: state dimension mismatch");
  }
  const int n = model.dim;
  const ComplexMatrix s = build_superoperator(model);

  ComplexVector y0(n * n);
  Eigen::Map<ComplexMatrix>(y0.data(), n, n) = rho0.matrix();

  const LinearOperatorFn op = [&s](const ComplexVector& y, ComplexVector& out) {
    out.noalias() = s * y;
  };
  const std::vector<ComplexVector> ys = integrate_linear_ode(op, y0, times, options);

  // Integrator error can leave tiny Hermiticity/trace/PSD violations; accept
  // them up to loose bounds and reject anything worse as a failed solve.
  DensityMatrix::Tolerances tol;
  tol.hermiticity = 1e-8;
  tol.trace = 1e-8;
  tol.psd = 1e-6;

  std::vector<DensityMatrix> out;
  out.reserve(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const ComplexMatrix rho = Eigen::Map<const ComplexMatrix>(ys[i].data(), n, n);
    try {
      out.emplace_back(rho, tol);
    } catch (const std::invalid_argument& err) {
      throw numerical_error("propagate: state at t = " + std::to_string(times[i]) +
                            " failed validation: " + err.what());
    }
  }
  return out;
}

std::vector<double> purity_trajectory(const LindbladModel& model, const DensityMatrix& rho0,
                                      const std::vector<double>& times,
                                      const OdeOptions& options) {
  const std::vector<DensityMatrix> states = propagate(model, rho0, times, options);
  std::vector<double> purities(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) purities[i] = states[i].purity();
  return purities;
}

PurityAnsatzFit compare_purity_ansatz(const std::vector<double>& purities, double p0,
                                      double p_inf, double rate,
                                      const std::vector<double>& times) {
  if (purities.size() != times.size()) {
    throw std::invalid_argument("compare_purity_ansatz: grid size mismatch");
  }
  if (purities.empty()) {
    throw std::invalid_argument("compare_purity_ansatz: empty trajectory");
  }
  PurityAnsatzFit fit;
  fit.rel_deviations.resize(purities.size());
  for (std::size_t i = 0; i < purities.size(); ++i) {
    if (!(purities[i] > 0.0)) {
      throw std::invalid_argument("compare_purity_ansatz: purities must be positive");
    }
    const double model = (p0 - p_inf) * std::exp(-rate * times[i]) + p_inf;
    fit.rel_deviations[i] = std::abs(model - purities[i]) / purities[i];
    fit.max_rel_deviation = std::max(fit.max_rel_deviation, fit.rel_deviations[i]);
  }
  return fit;
}

}  // namespace lindbrand
