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

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "lindbrand/rng.hpp"
#include "lindbrand/stats.hpp"

using namespace lindbrand;

TEST_CASE("RunningStat matches a naive two-pass mean/variance") {
  RandomStream stream(SeedSpec{1, 0});
  std::vector<double> xs(257);
  for (double& x : xs) x = stream.gaussian(3.0, 5.0);

  RunningStat stat;
  for (double x : xs) stat.add(x);

  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double var = ss / (xs.size() - 1.0);

  CHECK(stat.count() == xs.size());
  CHECK(stat.mean() == doctest::Approx(mean).epsilon(1e-13));
  CHECK(stat.variance() == doctest::Approx(var).epsilon(1e-12));
  CHECK(stat.stddev() == doctest::Approx(std::sqrt(var)).epsilon(1e-12));
  CHECK(stat.std_error() ==
        doctest::Approx(std::sqrt(var / xs.size())).epsilon(1e-12));
}

TEST_CASE("RunningStat guards against undefined moments") {
  RunningStat stat;
  CHECK_THROWS_AS(stat.mean(), std::invalid_argument);
  stat.add(1.0);
  CHECK(stat.mean() == 1.0);
  CHECK_THROWS_AS(stat.variance(), std::invalid_argument);
}

TEST_CASE("ks_statistic: hand-checkable two-point sample") {
  // Sample {0.25, 0.75} versus the uniform CDF on [0,1]:
  // at x=0.25 the empirical CDF jumps 0 -> 1/2 while F=0.25 (gap 0.25);
  // at x=0.75 it jumps 1/2 -> 1 while F=0.75 (gap 0.25). D = 0.25.
  const std::vector<double> sample = {0.25, 0.75};
  const double d = ks_statistic(sample, [](double x) { return x; });
  CHECK(d == doctest::Approx(0.25).epsilon(1e-15));

  // A sample exactly at the midpoints of quantile cells has D = 1/(2n).
  const std::vector<double> mid = {0.125, 0.375, 0.625, 0.875};
  const double dm = ks_statistic(mid, [](double x) { return x; });
  CHECK(dm == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("ks_statistic validates its input") {
  const std::vector<double> empty;
  CHECK_THROWS_AS(ks_statistic(empty, [](double x) { return x; }),
                  std::invalid_argument);
  // Unsorted input is a programming error, not a statistics question.
  const std::vector<double> unsorted = {0.9, 0.1};
  CHECK_THROWS_AS(ks_statistic(unsorted, [](double x) { return x; }),
                  std::invalid_argument);
}

TEST_CASE("fraction_above counts strictly greater values") {
  const std::vector<double> xs = {1.0, 2.0, 3.0, 3.0, 4.0};
  CHECK(fraction_above(xs, 3.0) == doctest::Approx(0.2));
  CHECK(fraction_above(xs, 0.0) == doctest::Approx(1.0));
  CHECK(fraction_above(xs, 5.0) == doctest::Approx(0.0));
  const std::vector<double> empty;
  CHECK_THROWS_AS(fraction_above(empty, 0.0), std::invalid_argument);
}

TEST_CASE("Histogram: counts, density normalization, and edge handling") {
  const std::vector<double> xs = {0.0, 0.1, 0.1, 0.5, 0.99, 1.0};
  const Histogram h = Histogram::build(xs, 0.0, 1.0, 4);
  REQUIRE(h.counts.size() == 4);
  // Bin width 0.25: {0, 0.1, 0.1} -> bin 0, {0.5} -> bin 2, {0.99, 1.0} ->
  // bin 3 (the right edge is clipped into the last bin).
  CHECK(h.counts[0] == 3);
  CHECK(h.counts[1] == 0);
  CHECK(h.counts[2] == 1);
  CHECK(h.counts[3] == 2);
  CHECK(h.total() == 6);
  CHECK(h.bin_width() == doctest::Approx(0.25));

  // Density integrates to one over the covered range.
  double integral = 0.0;
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    integral += h.density(i) * h.bin_width();
  }
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-12));

  // Out-of-range values are clipped into the edge bins, never dropped;
  // 0.5 sits on the interior boundary and lands in the upper bin.
  const std::vector<double> wild = {-5.0, 0.5, 7.0};
  const Histogram hw = Histogram::build(wild, 0.0, 1.0, 2);
  CHECK(hw.counts[0] == 1);
  CHECK(hw.counts[1] == 2);

  CHECK_THROWS_AS(Histogram::build(xs, 0.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Histogram::build(xs, 1.0, 1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(h.density(99), std::invalid_argument);
}
