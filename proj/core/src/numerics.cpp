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

#include "lindbrand/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lindbrand {

namespace {

void require_square(const ComplexMatrix& a, const char* who) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square, got " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

}  // namespace

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

complexd trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  return a.trace();
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: inner dimensions mismatch (" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                ")");
  }
  return a * b;
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  const double scale = std::max(1.0, a.norm());
  return (a - a.adjoint()).norm() / scale;
}

EigenSystem eig_hermitian(const ComplexMatrix& a, bool with_vectors) {
  require_square(a, "eig_hermitian");
  const double defect = hermiticity_defect(a);
  if (defect > 1e-10) {
    throw std::invalid_argument("eig_hermitian: input is not Hermitian (relative defect " +
                                std::to_string(defect) + ")");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver;
  solver.compute(a, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw numerical_error("eig_hermitian: eigensolver failed to converge");
  }
  EigenSystem out;
  out.values = solver.eigenvalues().cast<complexd>();
  if (with_vectors) out.vectors = solver.eigenvectors();
  return out;
}

EigenSystem eig_general(const ComplexMatrix& a, bool with_vectors) {
  require_square(a, "eig_general");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver;
  solver.compute(a, with_vectors);
  if (solver.info() != Eigen::Success) {
    throw numerical_error("eig_general: eigensolver failed to converge");
  }
  EigenSystem out;
  out.values = solver.eigenvalues();
  if (with_vectors) out.vectors = solver.eigenvectors();
  return out;
}

SchurDecomposition schur(const ComplexMatrix& a) {
  require_square(a, "schur");
  Eigen::ComplexSchur<ComplexMatrix> solver;
  solver.compute(a, /*computeU=*/true);
  if (solver.info() != Eigen::Success) {
    throw numerical_error("schur: reduction failed to converge");
  }
  return SchurDecomposition{solver.matrixU(), solver.matrixT()};
}

namespace {

// Butcher tableau of the Dormand-Prince 5(4) embedded pair.  The 5th-order
// weights coincide with the last stage (FSAL), so an accepted step reuses
// its final derivative evaluation as k1 of the next step.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA2[1] = {1.0 / 5};
constexpr double kA3[2] = {3.0 / 40, 9.0 / 40};
constexpr double kA4[3] = {44.0 / 45, -56.0 / 15, 32.0 / 9};
constexpr double kA5[4] = {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729};
constexpr double kA6[5] = {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176,
                           -5103.0 / 18656};
constexpr double kB5[7] = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784,
                           11.0 / 84, 0.0};
// kB5 - kB4: weights of the embedded error estimate.
constexpr double kE[7] = {35.0 / 384 - 5179.0 / 57600,
                          0.0,
                          500.0 / 1113 - 7571.0 / 16695,
                          125.0 / 192 - 393.0 / 640,
                          -2187.0 / 6784 + 92097.0 / 339200,
                          11.0 / 84 - 187.0 / 2100,
                          -1.0 / 40};

double error_norm(const ComplexVector& err, const ComplexVector& y_old,
                  const ComplexVector& y_new, const OdeOptions& opt) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    const double scale =
        opt.abs_tol + opt.rel_tol * std::max(std::abs(y_old[i]), std::abs(y_new[i]));
    const double q = std::abs(err[i]) / scale;
    acc += q * q;
  }
  return std::sqrt(acc / static_cast<double>(err.size()));
}

}  // namespace

std::vector<ComplexVector> integrate_linear_ode(const LinearOperatorFn& op,
                                                const ComplexVector& y0,
                                                const std::vector<double>& times,
                                                const OdeOptions& options) {
  if (times.empty()) throw std::invalid_argument("integrate_linear_ode: empty time grid");
  if (times.front() < 0.0) {
    throw std::invalid_argument("integrate_linear_ode: times must be >= 0");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (times[i] <= times[i - 1]) {
      throw std::invalid_argument("integrate_linear_ode: times must be strictly ascending");
    }
  }
  if (options.rel_tol <= 0 || options.abs_tol <= 0) {
    throw std::invalid_argument("integrate_linear_ode: tolerances must be positive");
  }

  const Eigen::Index n = y0.size();
  std::vector<ComplexVector> result;
  result.reserve(times.size());

  ComplexVector y = y0;
  double t = 0.0;
  std::size_t next_output = 0;
  if (times[0] == 0.0) {
    result.push_back(y0);
    next_output = 1;
    if (next_output == times.size()) return result;
  }

  ComplexVector k[7];
  for (auto& ki : k) ki.resize(n);
  ComplexVector y_stage(n), y_new(n), err(n);

  op(y, k[0]);  // k1 at t = 0

  // Initial step size from the ratio of solution scale to derivative scale.
  double h;
  {
    const double d0 = y.norm();
    const double d1 = k[0].norm();
    const double span = times.back() - t;
    h = (d1 > 1e-300) ? 0.01 * std::max(d0, options.abs_tol) / d1 : 1e-6;
    h = std::min(h, span);
    if (!(h > 0)) h = 1e-6;
  }

  std::size_t steps = 0;
  while (next_output < times.size()) {
    const double t_target = times[next_output];
    bool hit_target = false;
    if (t + h >= t_target) {
      h = t_target - t;
      hit_target = true;
    }
    if (++steps > options.max_steps) {
      throw numerical_error("integrate_linear_ode: exceeded max_steps (" +
                            std::to_string(options.max_steps) + ") at t = " + std::to_string(t));
    }
    if (h <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, t)) {
      throw numerical_error("integrate_linear_ode: step size underflow at t = " +
                            std::to_string(t) + " (system too stiff for this tolerance)");
    }

    // Stages 2..7.
    y_stage = y + h * kA2[0] * k[0];
    op(y_stage, k[1]);
    y_stage = y + h * (kA3[0] * k[0] + kA3[1] * k[1]);
    op(y_stage, k[2]);
    y_stage = y + h * (kA4[0] * k[0] + kA4[1] * k[1] + kA4[2] * k[2]);
    op(y_stage, k[3]);
    y_stage = y + h * (kA5[0] * k[0] + kA5[1] * k[1] + kA5[2] * k[2] + kA5[3] * k[3]);
    op(y_stage, k[4]);
    y_stage =
        y + h * (kA6[0] * k[0] + kA6[1] * k[1] + kA6[2] * k[2] + kA6[3] * k[3] + kA6[4] * k[4]);
    op(y_stage, k[5]);
    y_new = y + h * (kB5[0] * k[0] + kB5[2] * k[2] + kB5[3] * k[3] + kB5[4] * k[4] +
                     kB5[5] * k[5]);
    op(y_new, k[6]);

    err = h * (kE[0] * k[0] + kE[2] * k[2] + kE[3] * k[3] + kE[4] * k[4] + kE[5] * k[5] +
               kE[6] * k[6]);
    const double en = error_norm(err, y, y_new, options);

    if (en <= 1.0) {
      t += h;
      y.swap(y_new);
      k[0].swap(k[6]);  // FSAL
      if (hit_target) {
        result.push_back(y);
        ++next_output;
        // Skip duplicates is impossible (strictly ascending grid).
      }
    }
    // PI-free elementary controller with the customary safety bounds.
    const double factor =
        (en > 1e-300) ? 0.9 * std::pow(en, -0.2) : 5.0;
    h *= std::clamp(factor, 0.2, 5.0);
    (void)kC;
  }
  return result;
}

}  // namespace lindbrand
