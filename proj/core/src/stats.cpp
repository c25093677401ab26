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

#include "lindbrand/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lindbrand {

void RunningStat::add(double x) {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

double RunningStat::mean() const {
  if (count_ == 0) throw std::invalid_argument("RunningStat::mean: no samples");
  return mean_;
}

double RunningStat::variance() const {
  if (count_ < 2) throw std::invalid_argument("RunningStat::variance: needs >= 2 samples");
  return m2_ / static_cast<double>(count_ - 1);
}

double RunningStat::stddev() const { return std::sqrt(variance()); }

double RunningStat::std_error() const {
  return stddev() / std::sqrt(static_cast<double>(count_));
}

double ks_statistic(std::span<const double> sorted_sample,
                    const std::function<double(double)>& cdf) {
  const std::size_t n = sorted_sample.size();
  if (n == 0) throw std::invalid_argument("ks_statistic: empty sample");
  if (!std::is_sorted(sorted_sample.begin(), sorted_sample.end())) {
    throw std::invalid_argument("ks_statistic: sample must be sorted ascending");
  }
  double sup = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(sorted_sample[i]);
    const double lo = static_cast<double>(i) / static_cast<double>(n);
    const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
    sup = std::max({sup, std::abs(f - lo), std::abs(f - hi)});
  }
  return sup;
}

double fraction_above(std::span<const double> sample, double bound) {
  if (sample.empty()) throw std::invalid_argument("fraction_above: empty sample");
  std::size_t n_above = 0;
  for (double x : sample) {
    if (x > bound) ++n_above;
  }
  return static_cast<double>(n_above) / static_cast<double>(sample.size());
}

Histogram Histogram::build(std::span<const double> sample, double low, double high,
                           std::size_t n_bins) {
  if (!(low < high)) throw std::invalid_argument("Histogram: requires low < high");
  if (n_bins == 0) throw std::invalid_argument("Histogram: needs >= 1 bin");
  Histogram h;
  h.low = low;
  h.high = high;
  h.counts.assign(n_bins, 0);
  const double width = (high - low) / static_cast<double>(n_bins);
  for (double x : sample) {
    auto idx = static_cast<long>(std::floor((x - low) / width));
    idx = std::clamp<long>(idx, 0, static_cast<long>(n_bins) - 1);
    ++h.counts[static_cast<std::size_t>(idx)];
  }
  return h;
}

double Histogram::bin_width() const {
  return (high - low) / static_cast<double>(counts.size());
}

double Histogram::density(std::size_t i) const {
  if (i >= counts.size()) throw std::invalid_argument("Histogram::density: bin out of range");
  const std::size_t n = total();
  if (n == 0) return 0.0;
  return static_cast<double>(counts[i]) / (static_cast<double>(n) * bin_width());
}

std::size_t Histogram::total() const {
  std::size_t n = 0;
  for (auto c : counts) n += c;
  return n;
}

}  // namespace lindbrand
