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

#ifndef DPMULT_DATAMODEL_HPP_
#define DPMULT_DATAMODEL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dpmult {

// Transform applied by dataio::preprocess, kept with the dataset so the
// exact same transform can be replayed on held-out data.
struct PreprocessStats {
  std::vector<double> feature_mean;
  std::vector<double> feature_std;
  double norm_divisor = 1.0;
  bool intercept = false;
  bool applied = false;
  std::vector<std::string> warnings;
};

// Feature matrix (row-major n x d) with binary labels and an optional
// categorical group attribute. Immutable once built.
struct Dataset {
  std::vector<double> features;
  std::size_t num_rows = 0;
  std::size_t num_cols = 0;
  std::vector<int> labels;            // values in {0, 1}
  std::vector<std::string> groups;    // empty, or one label per row
  std::vector<std::string> feature_names;
  PreprocessStats preprocessing;

  std::span<const double> row(std::size_t i) const {
    return {features.data() + i * num_cols, num_cols};
  }
  bool has_groups() const { return !groups.empty(); }

  // Checks the shape invariants (n >= 1, d >= 1, matching lengths,
  // labels in {0,1}); throws std::invalid_argument on violation.
  void validate() const;
};

// Weights of a linear scoring model; the last coordinate is the intercept
// when intercept mode is on.
struct ParamVector {
  std::vector<double> weights;

  std::size_t dim() const { return weights.size(); }
};

struct PrivacyParams {
  double epsilon = 1.0;
  double delta = 0.0;
  double sensitivity_c = 1.0;
  double lambda_reg = 0.1;

  void validate() const;
};

// m parameter vectors sampled from the model distribution, together with
// the stream indices that produced them.
struct Ensemble {
  std::vector<ParamVector> models;
  std::vector<std::uint64_t> seeds;
  std::string train_config;  // opaque echo of the producing configuration

  std::size_t size() const { return models.size(); }

  // Throws unless all models share one dim and seeds (if present) match.
  void validate() const;
};

double raw_score(const ParamVector& theta, std::span<const double> x);

// 1 iff sigmoid(theta . x) > 0.5, i.e. iff theta . x > 0; a score of
// exactly zero maps to 0 (strict threshold).
int predict(const ParamVector& theta, std::span<const double> x);

// sigmoid(theta . x).
double confidence(const ParamVector& theta, std::span<const double> x);

}  // namespace dpmult

#endif  // DPMULT_DATAMODEL_HPP_
