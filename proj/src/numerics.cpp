// Copyright 2026 The dpmult Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "numerics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace dpmult {
namespace {

// SplitMix64 finalizer; also used to derive per-stream seed material.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

SeededRng::SeededRng(std::uint64_t root_seed, std::uint64_t stream_index)
    : root_seed_(root_seed), stream_index_(stream_index) {
  // Walk a SplitMix64 sequence whose start depends on both the root seed
  // and the stream index; four outputs fill the xoshiro256++ state.
  std::uint64_t sm = mix64(root_seed) ^ mix64(mix64(stream_index) + 1);
  for (auto& word : state_) {
    sm += 0x9e3779b97f4a7c15ULL;
    word = mix64(sm);
  }
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
    state_[0] = 0x9e3779b97f4a7c15ULL;  // xoshiro forbids the all-zero state
  }
}

std::uint64_t SeededRng::next_u64() {
  // xoshiro256++ by Blackman and Vigna (public domain reference code).
  const std::uint64_t result = std::rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = std::rotl(state_[3], 45);
  return result;
}

double SeededRng::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::next_gaussian() {
  if (has_cached_gaussian_) {
    has_cached_gaussian_ = false;
    return cached_gaussian_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_uniform() - 1.0;
    v = 2.0 * next_uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  cached_gaussian_ = v * f;
  has_cached_gaussian_ = true;
  return u * f;
}

double sigmoid(double t) {
  // Branch on the sign so exp() is only ever called on a non-positive
  // argument; exp(-|t|) underflows to 0 instead of overflowing.
  if (t >= 0.0) {
    return 1.0 / (1.0 + std::exp(-t));
  }
  const double e = std::exp(t);
  return e / (1.0 + e);
}

double std_normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

std::vector<double> sample_gaussian_vector(SeededRng& rng, std::size_t dim,
                                           double scale) {
  if (dim == 0) throw std::invalid_argument("dim must be positive");
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
  std::vector<double> out(dim);
  for (auto& value : out) value = scale * rng.next_gaussian();
  return out;
}

double sample_gamma(SeededRng& rng, double shape, double scale) {
  if (!(shape > 0.0)) throw std::invalid_argument("shape must be positive");
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
  if (shape < 1.0) {
    // Boost: Gamma(a) = Gamma(a + 1) * U^{1/a}.
    const double u = rng.next_uniform();
    return sample_gamma(rng, shape + 1.0, scale) *
           std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.next_gaussian();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return d * v * scale;
    }
  }
}

double percentile(std::span<const double> values, double q) {
  if (values.empty()) throw std::invalid_argument("empty sample");
  if (!(q >= 0.0 && q <= 100.0)) {
    throw std::invalid_argument("percentile q must be in [0, 100]");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = sorted.size();
  const std::size_t rank = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(q / 100.0 * static_cast<double>(n))));
  return sorted[std::min(rank, n) - 1];
}

}  // namespace dpmult
