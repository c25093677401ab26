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

#include "lindbrand/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lindbrand/stats.hpp"

namespace lindbrand {

bool is_hermitian_kind(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::orthogonal:
    case EnsembleKind::unitary:
    case EnsembleKind::symplectic:
      return true;
    case EnsembleKind::ginibre_real:
    case EnsembleKind::ginibre_complex:
    case EnsembleKind::ginibre_quaternion:
      return false;
  }
  throw std::invalid_argument("is_hermitian_kind: unknown ensemble kind");
}

std::string_view to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::orthogonal: return "goe";
    case EnsembleKind::unitary: return "gue";
    case EnsembleKind::symplectic: return "gse";
    case EnsembleKind::ginibre_real: return "ginoe";
    case EnsembleKind::ginibre_complex: return "ginue";
    case EnsembleKind::ginibre_quaternion: return "ginse";
  }
  throw std::invalid_argument("to_string: unknown ensemble kind");
}

std::optional<EnsembleKind> parse_ensemble_kind(std::string_view name) {
  if (name == "goe") return EnsembleKind::orthogonal;
  if (name == "gue") return EnsembleKind::unitary;
  if (name == "gse") return EnsembleKind::symplectic;
  if (name == "ginoe") return EnsembleKind::ginibre_real;
  if (name == "ginue") return EnsembleKind::ginibre_complex;
  if (name == "ginse") return EnsembleKind::ginibre_quaternion;
  return std::nullopt;
}

namespace {

bool is_quaternion_kind(EnsembleKind kind) {
  return kind == EnsembleKind::symplectic || kind == EnsembleKind::ginibre_quaternion;
}

}  // namespace

void EnsembleSpec::validate() const {
  if (sigma <= 0.0) {
    throw std::invalid_argument("EnsembleSpec: sigma must be > 0, got " +
                                std::to_string(sigma));
  }
  if (is_quaternion_kind(kind)) {
    // The quaternion classes live on even dimensions; dim = 2 is excluded
    // because the self-dual 2x2 block is a real scalar times the identity
    // (no off-diagonal freedom), which breaks the variance calibration.
    if (dim < 4 || dim % 2 != 0) {
      throw std::invalid_argument(std::string("EnsembleSpec: ") +
                                  std::string(to_string(kind)) +
                                  " requires an even dimension >= 4, got " +
                                  std::to_string(dim));
    }
  } else if (dim < 1) {
    throw std::invalid_argument("EnsembleSpec: dimension must be >= 1, got " +
                                std::to_string(dim));
  }
}

void MixedEnsembleSpec::validate() const {
  first.validate();
  second.validate();
  if (first.dim != second.dim) {
    throw std::invalid_argument("MixedEnsembleSpec: parts must share one dimension");
  }
  const double norm = weight_first * weight_first + weight_second * weight_second;
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "MixedEnsembleSpec: weights must satisfy w1^2 + w2^2 = 1 (got " +
        std::to_string(norm) + ")");
  }
}

int dimension(const AnyEnsembleSpec& spec) {
  return std::visit(
      [](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, EnsembleSpec>) {
          return s.dim;
        } else {
          return s.first.dim;
        }
      },
      spec);
}

void validate(const AnyEnsembleSpec& spec) {
  std::visit([](const auto& s) { s.validate(); }, spec);
}

std::string describe(const AnyEnsembleSpec& spec) {
  if (const auto* plain = std::get_if<EnsembleSpec>(&spec)) {
    return std::string(to_string(plain->kind)) + "(dim=" + std::to_string(plain->dim) + ")";
  }
  const auto& mixed = std::get<MixedEnsembleSpec>(spec);
  return "mixed(" + std::string(to_string(mixed.first.kind)) + "+" +
         std::string(to_string(mixed.second.kind)) + ", dim=" +
         std::to_string(mixed.first.dim) + ")";
}

namespace {

// Real symmetric: diagonal N(0, sigma^2), off-diagonal N(0, sigma^2).
ComplexMatrix sample_orthogonal(int n, double sigma, RandomStream& stream) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = stream.gaussian(0.0, sigma);
    for (int j = i + 1; j < n; ++j) {
      const double x = stream.gaussian(0.0, sigma);
      m(i, j) = x;
      m(j, i) = x;
    }
  }
  return m;
}

// Complex Hermitian: diagonal real N(0, sigma^2), off-diagonal entries with
// total variance sigma^2 (re/im components sigma^2/2 each).
ComplexMatrix sample_unitary(int n, double sigma, RandomStream& stream) {
  ComplexMatrix m(n, n);
  const double var = sigma * sigma;
  for (int i = 0; i < n; ++i) {
    m(i, i) = stream.gaussian(0.0, sigma);
    for (int j = i + 1; j < n; ++j) {
      const complexd z = stream.complex_gaussian(var);
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

// Assembles the quaternion-to-complex block embedding
//   [[A, B], [-conj(B), conj(A)]]
// shared by the self-dual Hermitian class and the quaternion Ginibre class.
ComplexMatrix quaternion_embedding(const ComplexMatrix& a, const ComplexMatrix& b) {
  const auto m = a.rows();
  ComplexMatrix out(2 * m, 2 * m);
  out.topLeftCorner(m, m) = a;
  out.topRightCorner(m, m) = b;
  out.bottomLeftCorner(m, m) = -b.conjugate();
  out.bottomRightCorner(m, m) = a.conjugate();
  return out;
}

// Self-dual Hermitian (even n = 2M): A Hermitian as in the unitary class,
// B complex antisymmetric with entry variance sigma^2 * M/(M-1).  The boost
// compensates B's structurally zero diagonal so that
// E[tr(L^dagger L)] = sigma^2 n^2 holds exactly; see the header notes.
ComplexMatrix sample_symplectic(int n, double sigma, RandomStream& stream) {
  const int m = n / 2;
  const ComplexMatrix a = sample_unitary(m, sigma, stream);
  const double var_b = sigma * sigma * static_cast<double>(m) / static_cast<double>(m - 1);
  ComplexMatrix b = ComplexMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const complexd z = stream.complex_gaussian(var_b);
      b(i, j) = z;
      b(j, i) = -z;
    }
  }
  return quaternion_embedding(a, b);
}

ComplexMatrix sample_ginibre_real(int n, double sigma, RandomStream& stream) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = stream.gaussian(0.0, sigma);
    }
  }
  return m;
}

ComplexMatrix sample_ginibre_complex(int n, double sigma, RandomStream& stream) {
  ComplexMatrix m(n, n);
  const double var = sigma * sigma;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = stream.complex_gaussian(var);
    }
  }
  return m;
}

// Quaternion-real Ginibre (even n = 2M): generic quaternion entries, i.e.
// A and B generic complex Gaussian blocks with entry variance sigma^2.
ComplexMatrix sample_ginibre_quaternion(int n, double sigma, RandomStream& stream) {
  const int m = n / 2;
  const ComplexMatrix a = sample_ginibre_complex(m, sigma, stream);
  const ComplexMatrix b = sample_ginibre_complex(m, sigma, stream);
  return quaternion_embedding(a, b);
}

}  // namespace

ComplexMatrix sample(const EnsembleSpec& spec, RandomStream& stream) {
  spec.validate();
  switch (spec.kind) {
    case EnsembleKind::orthogonal: return sample_orthogonal(spec.dim, spec.sigma, stream);
    case EnsembleKind::unitary: return sample_unitary(spec.dim, spec.sigma, stream);
    case EnsembleKind::symplectic: return sample_symplectic(spec.dim, spec.sigma, stream);
    case EnsembleKind::ginibre_real:
      return sample_ginibre_real(spec.dim, spec.sigma, stream);
    case EnsembleKind::ginibre_complex:
      return sample_ginibre_complex(spec.dim, spec.sigma, stream);
    case EnsembleKind::ginibre_quaternion:
      return sample_ginibre_quaternion(spec.dim, spec.sigma, stream);
  }
  throw std::invalid_argument("sample: unknown ensemble kind");
}

ComplexMatrix sample(const MixedEnsembleSpec& spec, RandomStream& stream) {
  spec.validate();
  const ComplexMatrix l1 = sample(spec.first, stream);
  const ComplexMatrix l2 = sample(spec.second, stream);
  return spec.weight_first * l1 + spec.weight_second * l2;
}

ComplexMatrix sample(const AnyEnsembleSpec& spec, RandomStream& stream) {
  return std::visit([&](const auto& s) { return sample(s, stream); }, spec);
}

ComplexMatrix sample_haar_unitary(int dim, RandomStream& stream) {
  if (dim < 1) throw std::invalid_argument("sample_haar_unitary: dim must be >= 1");
  // QR of a complex Ginibre matrix; multiplying Q by the phases of R's
  // diagonal makes the factorization unique and the result Haar (plain QR
  // alone biases toward a positive-real R diagonal in a basis-dependent
  // way).
  const ComplexMatrix g = sample_ginibre_complex(dim, 1.0, stream);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const complexd rjj = r(j, j);
    const double mag = std::abs(rjj);
    const complexd phase = (mag > 0.0) ? rjj / mag : complexd(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

ComplexVector sample_haar_pure_state(int dim, RandomStream& stream) {
  if (dim < 1) throw std::invalid_argument("sample_haar_pure_state: dim must be >= 1");
  ComplexVector psi(dim);
  double norm_sq = 0.0;
  do {
    for (int i = 0; i < dim; ++i) psi[i] = stream.complex_gaussian(1.0);
    norm_sq = psi.squaredNorm();
  } while (norm_sq == 0.0);
  return psi / std::sqrt(norm_sq);
}

namespace {

// CDF of the semicircle law on [-r, r] (argument clamped to the support).
double semicircle_cdf(double x, double r) {
  const double t = std::clamp(x / r, -1.0, 1.0);
  return 0.5 + (t * std::sqrt(1.0 - t * t) + std::asin(t)) / std::numbers::pi;
}

// Radial CDF of the circular law on [0, r]: F(s) = (s/r)^2, clamped above.
double circular_radial_cdf(double s, double r) {
  if (s <= 0.0) return 0.0;
  const double t = s / r;
  return std::min(t * t, 1.0);
}

}  // namespace

SpectralReport spectral_density_check(const EnsembleSpec& spec, int n_samples,
                                      RandomStream& stream) {
  spec.validate();
  if (n_samples < 1) {
    throw std::invalid_argument("spectral_density_check: n_samples must be >= 1");
  }
  const double scale = spec.sigma * std::sqrt(static_cast<double>(spec.dim));
  const bool hermitian = is_hermitian_kind(spec.kind);
  // Hermitian classes: eigenvalues against the semicircle of radius
  // 2 sigma sqrt(N).  Ginibre classes: |eigenvalue| against the circular
  // law of radius sigma sqrt(N).
  const double support = hermitian ? 2.0 * scale : scale;

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n_samples) * static_cast<std::size_t>(spec.dim));
  std::size_t n_outliers = 0;
  for (int s = 0; s < n_samples; ++s) {
    const ComplexMatrix l = sample(spec, stream);
    if (hermitian) {
      const EigenSystem eig = eig_hermitian(l, /*with_vectors=*/false);
      for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        const double x = eig.values[i].real();
        values.push_back(x);
        if (std::abs(x) > 1.05 * support) ++n_outliers;
      }
    } else {
      const EigenSystem eig = eig_general(l, /*with_vectors=*/false);
      for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        const double radius = std::abs(eig.values[i]);
        values.push_back(radius);
        if (radius > 1.05 * support) ++n_outliers;
      }
    }
  }
  std::sort(values.begin(), values.end());

  SpectralReport report;
  report.n_eigenvalues = values.size();
  report.outlier_fraction =
      static_cast<double>(n_outliers) / static_cast<double>(values.size());
  const auto cdf = [&](double x) {
    return hermitian ? semicircle_cdf(x, support) : circular_radial_cdf(x, support);
  };
  report.ks_distance = ks_statistic(values, cdf);
  return report;
}

TraceSplit schur_trace_split(const ComplexMatrix& g) {
  if (g.rows() != g.cols()) {
    throw std::invalid_argument("schur_trace_split: matrix must be square");
  }
  const SchurDecomposition dec = schur(g);
  TraceSplit split;
  const auto n = dec.triangular.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    split.eigenvalue_sq_sum += std::norm(dec.triangular(i, i));
    for (Eigen::Index j = i + 1; j < n; ++j) {
      split.strict_upper_sq_sum += std::norm(dec.triangular(i, j));
    }
  }
  split.frobenius_sq = g.squaredNorm();
  return split;
}

}  // namespace lindbrand
