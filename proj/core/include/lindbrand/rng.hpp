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
#include <cstdint>
#include <vector>

#include <random>

namespace lindbrand {

// Addresses one reproducible random stream: a user-chosen master seed plus a
// stream index.  Identical SeedSpec => identical draw sequence, on every
// platform (the generator and all variate transforms are fully specified,
// nothing is drawn from implementation-defined std::distributions).
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

// Derives the SeedSpec of child stream `index` of `parent`.  The derivation
// is composable: substreams of distinct parents (and distinct indices of the
// same parent) are decorrelated by a 64-bit finalizer hash, so parallel work
// items can each own substream(root, item_index) without coordination.
SeedSpec substream(const SeedSpec& parent, std::uint64_t index);

// A deterministic random stream (mt19937_64 engine keyed by a SeedSpec hash)
// with the variate transforms used across the library.  Not thread-safe;
// give each worker its own stream.
class RandomStream {
 public:
  explicit RandomStream(SeedSpec spec);

  const SeedSpec& spec() const { return spec_; }

  // Child stream factory; see substream(SeedSpec, index).
  RandomStream substream(std::uint64_t index) const;

  // Uniform double in [0, 1) with 53-bit resolution.
  double uniform();

  // Uniform double in [low, high); requires low < high.
  double uniform(double low, double high);

  // Standard normal via Box-Muller (the spare variate is cached, so draws
  // come in deterministic pairs).
  double gaussian();

  // Normal with the given mean and standard deviation (stddev >= 0).
  double gaussian(double mean, double stddev);

  // `count` i.i.d. normals.
  std::vector<double> gaussian_vector(double mean, double stddev, std::size_t count);

  // Complex Gaussian with independent real and imaginary parts of variance
  // total_variance/2 each (so E|z|^2 = total_variance).
  std::complex<double> complex_gaussian(double total_variance);

  // Uniform integer in [0, bound) via rejection (unbiased); bound >= 1.
  std::uint64_t uniform_index(std::uint64_t bound);

 private:
  SeedSpec spec_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace lindbrand
