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

#ifndef DPMULT_NUMERICS_HPP_
#define DPMULT_NUMERICS_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace dpmult {

// Deterministic random stream addressed by (root_seed, stream_index).
//
// Streams with distinct indices are derived through a SplitMix64-style
// mixing function and feed a xoshiro256++ generator, so any number of
// re-trainings can run in parallel and still be reproduced one by one.
// The same (root_seed, stream_index) always yields the same byte stream;
// an Rng value is single-owner and must not be shared between tasks.
class SeededRng {
 public:
  SeededRng(std::uint64_t root_seed, std::uint64_t stream_index);

  std::uint64_t root_seed() const { return root_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  std::uint64_t next_u64();

  // Uniform draw in [0, 1) with 53 random bits.
  double next_uniform();

  // Standard normal draw via the polar Box-Muller method. Draws come in
  // pairs; the second one is cached inside the generator state.
  double next_gaussian();

 private:
  std::uint64_t state_[4];
  std::uint64_t root_seed_;
  std::uint64_t stream_index_;
  double cached_gaussian_ = 0.0;
  bool has_cached_gaussian_ = false;
};

// Numerically stable logistic function 1 / (1 + exp(-t)). Total on finite
// input; no overflow for |t| up to and beyond 700.
double sigmoid(double t);

// Standard normal CDF, absolute error well below 1e-7.
double std_normal_cdf(double z);

// dim i.i.d. draws from N(0, scale^2). Unit normals are drawn first and
// multiplied by scale, so the same seed at scale 2 gives exactly twice the
// scale-1 vector.
std::vector<double> sample_gaussian_vector(SeededRng& rng, std::size_t dim,
                                           double scale);

// One Gamma(shape, scale) draw (Marsaglia-Tsang, with the shape < 1 boost).
double sample_gamma(SeededRng& rng, double shape, double scale);

// Nearest-rank percentile: rank = max(1, ceil(q/100 * n)) over the ascending
// sort, q in [0, 100]. Throws std::invalid_argument("empty sample") on an
// empty input.
double percentile(std::span<const double> values, double q);

}  // namespace dpmult

#endif  // DPMULT_NUMERICS_HPP_
