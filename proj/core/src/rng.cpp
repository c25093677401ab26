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

#include "lindbrand/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lindbrand {

namespace {

// SplitMix64 finalizer: a bijective 64-bit mix with full avalanche, the
// standard choice for turning structured seed material (seed, index) into
// decorrelated engine keys.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_key(const SeedSpec& spec) {
  return splitmix64(splitmix64(spec.master_seed) ^ spec.stream_index);
}

}  // namespace

SeedSpec substream(const SeedSpec& parent, std::uint64_t index) {
  // The child's master seed hashes the parent's full identity, so
  // substream(substream(s, i), j) chains are decorrelated as well.
  return SeedSpec{stream_key(parent), index};
}

RandomStream::RandomStream(SeedSpec spec) : spec_(spec) {
  // Expand the stream key into the 312-word mt19937_64 state via seed_seq
  // (fully specified by the standard, hence portable bit-for-bit).
  const std::uint64_t key = stream_key(spec_);
  std::seed_seq seq{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32),
                    static_cast<std::uint32_t>(spec_.stream_index),
                    static_cast<std::uint32_t>(spec_.stream_index >> 32)};
  engine_.seed(seq);
}

RandomStream RandomStream::substream(std::uint64_t index) const {
  return RandomStream(lindbrand::substream(spec_, index));
}

double RandomStream::uniform() {
  // Top 53 bits of the engine output, mapped to [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double low, double high) {
  if (!(low < high)) throw std::invalid_argument("uniform: requires low < high");
  return low + (high - low) * uniform();
}

double RandomStream::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller on (0, 1] x [0, 1) uniforms; u1 > 0 by construction.
  const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

double RandomStream::gaussian(double mean, double stddev) {
  if (stddev < 0) throw std::invalid_argument("gaussian: stddev must be >= 0");
  return mean + stddev * gaussian();
}

std::vector<double> RandomStream::gaussian_vector(double mean, double stddev,
                                                  std::size_t count) {
  std::vector<double> out(count);
  for (auto& x : out) x = gaussian(mean, stddev);
  return out;
}

std::complex<double> RandomStream::complex_gaussian(double total_variance) {
  if (total_variance < 0) {
    throw std::invalid_argument("complex_gaussian: variance must be >= 0");
  }
  const double component = std::sqrt(total_variance / 2.0);
  const double re = gaussian(0.0, component);
  const double im = gaussian(0.0, component);
  return {re, im};
}

std::uint64_t RandomStream::uniform_index(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_index: bound must be >= 1");
  // Rejection sampling on the top multiple of `bound` to avoid modulo bias.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

}  // namespace lindbrand
