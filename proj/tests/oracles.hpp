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

// Independent reference implementations used only by the tests.  Everything
// here deliberately avoids the code paths under test: matrix products are
// naive triple loops, the matrix exponential is plain scaling-and-squaring
// with a Taylor core, quadrature comes from Boost.Math, and series are
// summed directly from their definitions.

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lindbrand/numerics.hpp"

namespace oracle {

using lindbrand::complexd;
using lindbrand::ComplexMatrix;
using lindbrand::ComplexVector;

inline ComplexMatrix naive_matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("naive_matmul: shape mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      complexd acc = 0.0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

// exp(A) by scaling-and-squaring: scale so |A/2^s|_1 <= 1/2, run the Taylor
// series to machine precision (~30 terms suffice at that norm), square back.
inline ComplexMatrix expm(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: square input required");
  const Eigen::Index n = a.rows();
  double norm1 = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    double col = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) col += std::abs(a(i, j));
    norm1 = std::max(norm1, col);
  }
  int s = 0;
  while (norm1 > 0.5) {
    norm1 *= 0.5;
    ++s;
  }
  const ComplexMatrix scaled = a / std::pow(2.0, s);
  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = naive_matmul(term, scaled) / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-19) break;
  }
  for (int k = 0; k < s; ++k) result = naive_matmul(result, result);
  return result;
}

// Adaptive Gauss-Kronrod quadrature (Boost.Math), relative tolerance ~tol.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 15, tol);
}

// 2F1(1, k+1; k+2; z) summed straight from the hypergeometric series:
// sum_m ((1)_m (k+1)_m / (k+2)_m) z^m / m! = sum_m (k+1)/(k+1+m) z^m.
inline double hyp2f1_series(int k, double z) {
  if (!(z > -1.0 && z < 1.0)) throw std::domain_error("hyp2f1_series: |z| < 1 required");
  const double kp1 = static_cast<double>(k + 1);
  double total = 0.0;
  double zp = 1.0;
  for (int m = 0; m < 100000; ++m) {
    const double term = kp1 / (kp1 + static_cast<double>(m)) * zp;
    total += term;
    if (std::abs(term) < 1e-17 * std::abs(total)) break;
    zp *= z;
  }
  return total;
}

// Cumulants from raw moments (k1..k4).
struct RawMoments {
  double m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
};

struct CumulantSet {
  double k1 = 0.0, k2 = 0.0, k3 = 0.0, k4 = 0.0;
};

inline CumulantSet cumulants_from_moments(const RawMoments& m) {
  CumulantSet c;
  c.k1 = m.m1;
  c.k2 = m.m2 - m.m1 * m.m1;
  c.k3 = m.m3 - 3.0 * m.m2 * m.m1 + 2.0 * std::pow(m.m1, 3);
  c.k4 = m.m4 - 4.0 * m.m3 * m.m1 - 3.0 * m.m2 * m.m2 + 12.0 * m.m2 * m.m1 * m.m1 -
         6.0 * std::pow(m.m1, 4);
  return c;
}

}  // namespace oracle
