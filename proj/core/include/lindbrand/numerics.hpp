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

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "lindbrand/errors.hpp"

// Dense complex linear algebra and ODE integration.
//
// Matrix storage, factorizations (Hermitian/general eigendecomposition,
// Schur) and BLAS-level kernels delegate to Eigen; this header fixes the
// library-wide types and the validation/error contracts on top of it.

namespace lindbrand {

using complexd = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Result of an eigendecomposition.  `values` are the eigenvalues (real for
// Hermitian input, stored with zero imaginary part); `vectors` holds the
// eigenvectors as columns, or is empty (0x0) when they were not requested.
struct EigenSystem {
  ComplexVector values;
  ComplexMatrix vectors;
};

// Schur form A = unitary * triangular * unitary^dagger with `triangular`
// upper triangular; the diagonal of `triangular` carries the eigenvalues.
struct SchurDecomposition {
  ComplexMatrix unitary;
  ComplexMatrix triangular;
};

// A^dagger (conjugate transpose).
ComplexMatrix adjoint(const ComplexMatrix& a);

// Trace of a square matrix.  Throws std::invalid_argument for non-square
// input.
complexd trace(const ComplexMatrix& a);

// Matrix product with shape validation (throws std::invalid_argument on an
// inner-dimension mismatch).
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Frobenius-norm Hermiticity defect |A - A^dagger|_F / max(1, |A|_F).
double hermiticity_defect(const ComplexMatrix& a);

// Eigendecomposition of a Hermitian matrix.  The input must be square with
// relative Hermiticity defect <= 1e-10, else std::invalid_argument.  The
// returned eigenvalues are sorted ascending (Eigen's self-adjoint solver
// convention) and exactly real.
EigenSystem eig_hermitian(const ComplexMatrix& a, bool with_vectors = true);

// Eigendecomposition of a general complex square matrix.  Eigenvalue order
// is unspecified.  Throws numerical_error if the solver fails to converge.
EigenSystem eig_general(const ComplexMatrix& a, bool with_vectors = true);

// Complex Schur decomposition of a general square matrix.  Throws
// numerical_error if the reduction fails to converge.
SchurDecomposition schur(const ComplexMatrix& a);

// Options for integrate_linear_ode.  Accuracy is controlled by a mixed
// error norm with per-component scale abs_tol + rel_tol * |y_i|.
struct OdeOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-14;
  // Hard cap on accepted+rejected steps; exceeding it (or a step size
  // collapsing below ~16 ulp of t, e.g. for a stiff system) raises
  // numerical_error rather than silently degrading accuracy.
  std::size_t max_steps = 10'000'000;
};

// Right-hand side of a linear ODE y' = op(y): writes op(y) into `out`
// (pre-sized to y.size()).
using LinearOperatorFn = std::function<void(const ComplexVector& y, ComplexVector& out)>;

// Integrates y' = op(y) from t = 0 with the adaptive embedded Dormand-Prince
// 5(4) pair and returns the solution at each requested time.
//
// Preconditions (std::invalid_argument): `times` non-empty, strictly
// ascending, all >= 0.  A leading t = 0 entry returns y0 itself.
// Failure to converge within OdeOptions::max_steps or a step-size underflow
// raises numerical_error.
std::vector<ComplexVector> integrate_linear_ode(const LinearOperatorFn& op,
                                                const ComplexVector& y0,
                                                const std::vector<double>& times,
                                                const OdeOptions& options = {});

}  // namespace lindbrand
