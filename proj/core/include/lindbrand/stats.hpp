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
#include <functional>
#include <span>
#include <vector>

namespace lindbrand {

// Numerically stable streaming mean/variance (Welford's update).  Feeding
// values in a fixed order yields bit-identical results, which the
// deterministic-parallelism contract relies on.
class RunningStat {
 public:
  void add(double x);

  std::size_t count() const { return count_; }
  double mean() const;
  // Unbiased sample variance (count >= 2, else std::invalid_argument).
  double variance() const;
  double stddev() const;
  // Standard error of the mean, stddev / sqrt(count).
  double std_error() const;

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// One-sample Kolmogorov-Smirnov statistic
//   sup_x |F_empirical(x) - cdf(x)|
// for an ascending-sorted sample against a reference CDF.  Requires a
// non-empty sorted input (std::invalid_argument otherwise).
double ks_statistic(std::span<const double> sorted_sample,
                    const std::function<double(double)>& cdf);

// Fraction of sample values strictly greater than `bound`.
double fraction_above(std::span<const double> sample, double bound);

// Equal-width histogram over [low, high]; values outside are clipped into
// the edge bins.  Used by the experiment CSV writers.
struct Histogram {
  double low = 0.0;
  double high = 1.0;
  std::vector<std::size_t> counts;

  static Histogram build(std::span<const double> sample, double low, double high,
                         std::size_t n_bins);
  double bin_width() const;
  // Empirical probability density of bin i (count / (total * width)).
  double density(std::size_t i) const;
  std::size_t total() const;
};

}  // namespace lindbrand
