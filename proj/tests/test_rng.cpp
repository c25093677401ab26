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

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "lindbrand/rng.hpp"
#include "lindbrand/stats.hpp"

using namespace lindbrand;

TEST_CASE("identical seed specs reproduce identical draws") {
  RandomStream a(SeedSpec{123456789, 42});
  RandomStream b(SeedSpec{123456789, 42});
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.uniform() == b.uniform());
    CHECK(a.gaussian() == b.gaussian());
    CHECK(a.complex_gaussian(2.0) == b.complex_gaussian(2.0));
  }
}

TEST_CASE("different stream indices decorrelate") {
  RandomStream a(SeedSpec{123456789, 0});
  RandomStream b(SeedSpec{123456789, 1});
  int equal = 0;
  const int n = 4096;
  for (int i = 0; i < n; ++i) {
    if (a.uniform() == b.uniform()) ++equal;
  }
  CHECK(equal == 0);

  // Empirical correlation between the two streams should be tiny.
  RandomStream c(SeedSpec{5, 0});
  RandomStream d(SeedSpec{5, 1});
  double sum_cd = 0.0;
  for (int i = 0; i < n; ++i) {
    sum_cd += (c.uniform() - 0.5) * (d.uniform() - 0.5);
  }
  // Var of the product of two independent centered uniforms is 1/144;
  // 5 sigma of the mean over n draws.
  CHECK(std::abs(sum_cd / n) < 5.0 / (12.0 * std::sqrt(static_cast<double>(n))));
}

TEST_CASE("substream derivation is deterministic and order-free") {
  const SeedSpec root{20260814, 0};
  RandomStream parent(root);
  RandomStream child_a = parent.substream(3);
  RandomStream child_b = RandomStream(root).substream(3);
  CHECK(child_a.uniform() == child_b.uniform());

  // Substreams with different indices differ from each other and the parent.
  RandomStream other = RandomStream(root).substream(4);
  CHECK(RandomStream(root).substream(3).uniform() != other.uniform());
  CHECK(RandomStream(root).uniform() != RandomStream(root).substream(0).uniform());
}

TEST_CASE("uniform stays in [low, high) and has the right mean") {
  RandomStream stream(SeedSpec{77, 0});
  RunningStat stat;
  for (int i = 0; i < 20000; ++i) {
    const double u = stream.uniform(-2.0, 3.0);
    CHECK(u >= -2.0);
    CHECK(u < 3.0);
    stat.add(u);
  }
  // Mean 0.5, stddev 5/sqrt(12); 5 sigma of the sample mean.
  const double se = 5.0 / std::sqrt(12.0 * stat.count());
  CHECK(std::abs(stat.mean() - 0.5) < 5.0 * se);
}

TEST_CASE("gaussian moments match the requested mean and variance") {
  RandomStream stream(SeedSpec{88, 0});
  RunningStat stat;
  const int n = 100000;
  for (int i = 0; i < n; ++i) stat.add(stream.gaussian(1.5, 2.0));
  CHECK(std::abs(stat.mean() - 1.5) < 5.0 * 2.0 / std::sqrt(static_cast<double>(n)));
  // Var of the sample variance of a Gaussian is 2 sigma^4 / (n-1).
  const double var_se = std::sqrt(2.0 * 16.0 / (n - 1.0));
  CHECK(std::abs(stat.variance() - 4.0) < 5.0 * var_se);
}

TEST_CASE("complex_gaussian splits the variance evenly across components") {
  RandomStream stream(SeedSpec{99, 0});
  RunningStat re;
  RunningStat im;
  RunningStat mag2;
  const int n = 100000;
  const double total_variance = 3.0;
  for (int i = 0; i < n; ++i) {
    const std::complex<double> z = stream.complex_gaussian(total_variance);
    re.add(z.real());
    im.add(z.imag());
    mag2.add(std::norm(z));
  }
  const double comp_var = total_variance / 2.0;
  const double var_se = std::sqrt(2.0 * comp_var * comp_var / (n - 1.0));
  CHECK(std::abs(re.variance() - comp_var) < 5.0 * var_se);
  CHECK(std::abs(im.variance() - comp_var) < 5.0 * var_se);
  // E|z|^2 = total variance; |z|^2 is exponential with that mean.
  CHECK(std::abs(mag2.mean() - total_variance) <
        5.0 * total_variance / std::sqrt(static_cast<double>(n)));
  CHECK(std::abs(re.mean()) < 5.0 * std::sqrt(comp_var / n));
  CHECK(std::abs(im.mean()) < 5.0 * std::sqrt(comp_var / n));
}

TEST_CASE("gaussian_vector equals element-wise gaussian draws") {
  RandomStream a(SeedSpec{7, 7});
  RandomStream b(SeedSpec{7, 7});
  const std::vector<double> v = a.gaussian_vector(0.0, 1.0, 9);
  REQUIRE(v.size() == 9);
  for (int i = 0; i < 9; ++i) CHECK(v[i] == b.gaussian(0.0, 1.0));
}

TEST_CASE("uniform_index covers the full range without bias") {
  RandomStream stream(SeedSpec{13, 0});
  std::vector<int> counts(7, 0);
  const int n = 70000;
  for (int i = 0; i < n; ++i) {
    const std::size_t k = stream.uniform_index(7);
    REQUIRE(k < 7);
    ++counts[k];
  }
  for (int c : counts) {
    // Binomial(n, 1/7): 5 sigma window around the expected count.
    const double expected = n / 7.0;
    const double sigma = std::sqrt(n * (1.0 / 7.0) * (6.0 / 7.0));
    CHECK(std::abs(c - expected) < 5.0 * sigma);
  }
}

TEST_CASE("uniform draws pass a KS test against the uniform CDF") {
  RandomStream stream(SeedSpec{20260814, 5});
  std::vector<double> draws(5000);
  for (double& d : draws) d = stream.uniform();
  std::sort(draws.begin(), draws.end());
  const double ks = ks_statistic(draws, [](double x) { return x; });
  // Kolmogorov 1% critical value ~ 1.63 / sqrt(n).
  CHECK(ks < 1.63 / std::sqrt(5000.0));
}
