// Copyright 2026 The toxkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOXKIT_NGRAM_HPP
#define TOXKIT_NGRAM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "toxkit/scorer.hpp"

namespace toxkit {

/// Hashed character n-gram logistic model. Each lowercased word is padded
/// with '#' on both ends before n-gram extraction, so word-initial and
/// word-final grams are distinct features; splitting a word therefore
/// measurably changes its feature vector.
struct NgramModel {
  std::vector<int> n_set = {2, 3, 4};
  std::uint64_t num_buckets = 1u << 18;
  double bias = 0.0;
  std::vector<double> weights;  // length == num_buckets
  std::uint64_t seed = 0;       // training seed, echoed for provenance

  void validate() const;  // throws std::invalid_argument on bad shape
};

/// Sparse feature counts: bucket index -> count. Buckets are
/// FNV-1a-64(ngram bytes) mod num_buckets over all n in n_set, accumulated
/// over every padded word of the text. Ordered map so iteration order is
/// deterministic.
std::map<std::uint64_t, std::uint32_t> ngram_features(
    const std::string& text, const std::vector<int>& n_set,
    std::uint64_t num_buckets);

double logistic(double z);

/// logistic(sum count_b * weight_b + bias).
ToxicityScore ngram_score(const std::string& text, const NgramModel& model);

class NgramScorer : public Scorer {
 public:
  explicit NgramScorer(NgramModel model);
  ToxicityScore score(const std::string& text) const override;
  const NgramModel& model() const { return model_; }

 private:
  NgramModel model_;
};

/// Versioned little-endian binary model format; save(load(f)) is byte-exact.
void save_model(const NgramModel& model, const std::string& path);
NgramModel load_model(const std::string& path);

std::string serialize_model(const NgramModel& model);
NgramModel parse_model(const std::string& bytes);

}  // namespace toxkit

#endif  // TOXKIT_NGRAM_HPP
