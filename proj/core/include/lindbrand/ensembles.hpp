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
#include <string_view>
#include <variant>

#include "lindbrand/numerics.hpp"
#include "lindbrand/rng.hpp"

// Random-matrix ensembles for jump operators.
//
// Six ensembles are provided: the three Hermitian Wigner-Dyson classes
// (orthogonal, unitary, symplectic) and their three non-Hermitian Ginibre
// counterparts (real, complex, quaternion-real entries).
//
// Variance calibration.  All samplers share one normalization: every entry
// of the N x N complex representation carries total variance sigma^2, and
// diagonal entries of the Hermitian classes are real N(0, sigma^2).  This
// pins the second moment
//     E[tr(L^dagger L)] = sigma^2 N^2        (exactly, all six ensembles)
// which is what the closed-form decoherence-rate expressions assume.
// Concretely:
//   * orthogonal (real symmetric):   off-diagonal entries N(0, sigma^2);
//   * unitary (complex Hermitian):   off-diagonal re/im ~ N(0, sigma^2/2);
//   * symplectic (self-dual, even N = 2M, block form
//         H = [[A, B], [-conj(B), conj(A)]],  A = A^dagger, B^T = -B):
//     A is drawn as the unitary class above; B's strictly-off-diagonal
//     entries get total variance sigma^2 * M/(M-1) -- the mild boost makes
//     up for B's structurally zero diagonal so the trace calibration above
//     stays exact at finite N (a self-dual matrix has fewer free entries
//     than a generic Hermitian one, so per-entry uniformity cannot hold);
//   * Ginibre real:                  entries N(0, sigma^2);
//   * Ginibre complex:               entries re/im ~ N(0, sigma^2/2);
//   * Ginibre quaternion-real (even N): same block form with A, B generic
//     complex, all four real components of each quaternion at variance
//     sigma^2/2 (entry total sigma^2; eigenvalues come in conjugate pairs).
//
// Spectral support for these conventions: Hermitian classes follow the
// semicircle of radius 2*sigma*sqrt(N); Ginibre classes fill the disk of
// radius sigma*sqrt(N).

namespace lindbrand {

enum class EnsembleKind { orthogonal, unitary, symplectic, ginibre_real, ginibre_complex,
                          ginibre_quaternion };

// True for the three Hermitian Wigner-Dyson classes.
bool is_hermitian_kind(EnsembleKind kind);

// Canonical short names: "goe", "gue", "gse", "ginoe", "ginue", "ginse".
std::string_view to_string(EnsembleKind kind);
std::optional<EnsembleKind> parse_ensemble_kind(std::string_view name);

// One ensemble: kind, matrix dimension, entry scale sigma.
// validate() throws std::invalid_argument unless dim >= 1 (>= 2 and even for
// the quaternion classes) and sigma > 0.
struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::orthogonal;
  int dim = 2;
  double sigma = 1.0;

  void validate() const;
};

// Normalized linear combination a1 * L1 + a2 * L2 of two independent draws,
// with a1^2 + a2^2 = 1 (checked to 1e-12) so the sigma^2 N^2 trace
// calibration is preserved.  Both parts must share one dimension.
struct MixedEnsembleSpec {
  EnsembleSpec first;
  EnsembleSpec second;
  double weight_first = 0.7071067811865476;
  double weight_second = 0.7071067811865476;

  void validate() const;
};

// Either a plain ensemble or a normalized two-ensemble mixture.
using AnyEnsembleSpec = std::variant<EnsembleSpec, MixedEnsembleSpec>;

int dimension(const AnyEnsembleSpec& spec);
void validate(const AnyEnsembleSpec& spec);
std::string describe(const AnyEnsembleSpec& spec);

// Draws one matrix.  Hermitian-class outputs are Hermitian to the last bit
// (built from explicitly symmetrized storage); symplectic-class outputs
// satisfy their block self-duality structurally.
ComplexMatrix sample(const EnsembleSpec& spec, RandomStream& stream);
ComplexMatrix sample(const MixedEnsembleSpec& spec, RandomStream& stream);
ComplexMatrix sample(const AnyEnsembleSpec& spec, RandomStream& stream);

// Haar-distributed unitary via QR of a complex Ginibre matrix with the
// R-diagonal phase fix (without the fix, QR alone is not Haar).
ComplexMatrix sample_haar_unitary(int dim, RandomStream& stream);

// Haar-random pure state: a normalized vector of i.i.d. complex Gaussians.
ComplexVector sample_haar_pure_state(int dim, RandomStream& stream);

// Empirical-spectrum diagnostic against the ensemble's limiting law.
//   * Hermitian classes: Kolmogorov-Smirnov distance of all eigenvalues to
//     the semicircle CDF on [-2 sigma sqrt(N), 2 sigma sqrt(N)].
//   * Ginibre classes: KS distance of |eigenvalue| to the circular-law
//     radial CDF r^2 on [0, sigma sqrt(N)], plus the fraction of
//     eigenvalues with |eigenvalue| > 1.05 * sigma * sqrt(N).
struct SpectralReport {
  double ks_distance = 0.0;
  double outlier_fraction = 0.0;
  std::size_t n_eigenvalues = 0;
};
SpectralReport spectral_density_check(const EnsembleSpec& spec, int n_samples,
                                      RandomStream& stream);

// Schur-based split of the squared Frobenius norm of a general matrix:
//   |G|_F^2 = sum_i |eigenvalue_i|^2 + |strict upper triangle of T|_F^2.
// `eigenvalue_sq_sum` comes from the diagonal of the Schur factor T and
// `strict_upper_sq_sum` from its strict upper triangle, computed
// independently of |G|_F^2 so the identity is a genuine unitarity check.
struct TraceSplit {
  double eigenvalue_sq_sum = 0.0;
  double strict_upper_sq_sum = 0.0;
  double frobenius_sq = 0.0;
};
TraceSplit schur_trace_split(const ComplexMatrix& g);

}  // namespace lindbrand
