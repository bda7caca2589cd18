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

#ifndef TOXKIT_TRAIN_HPP
#define TOXKIT_TRAIN_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "toxkit/lexicon.hpp"
#include "toxkit/ngram.hpp"
#include "toxkit/perturb.hpp"

namespace toxkit {

struct LabeledExample {
  std::string text;
  bool toxic = false;
};

struct LabeledCorpus {
  std::vector<LabeledExample> examples;  // in load order
  std::string provenance;                // source path, "" for synthetic
};

/// JSON-lines corpus: one {"text": ..., "toxic": ...} object per line.
/// Malformed lines are reported with their 1-based line number.
LabeledCorpus load_corpus(const std::string& path);
void save_corpus(const LabeledCorpus& corpus, const std::string& path);
std::string serialize_corpus(const LabeledCorpus& corpus);

/// SGD hyperparameters plus the model shape. Training is sequential by
/// contract: the seeded shuffle order defines the result bit-for-bit.
struct TrainConfig {
  double learning_rate = 0.1;
  int epochs = 20;
  double l2_lambda = 1e-4;
  std::uint64_t seed = 1;
  std::vector<int> n_set = {2, 3, 4};
  std::uint64_t num_buckets = 1u << 18;

  void validate() const;  // throws std::invalid_argument
};

struct TrainResult {
  NgramModel model;
  std::vector<double> epoch_losses;  // regularized mean loss after each epoch
};

/// Logistic regression on hashed n-gram counts. L2 is applied to the touched
/// coordinates of each update (sparse regularization). Identical
/// (corpus, config) pairs produce bit-identical models. Throws
/// std::invalid_argument when the corpus lacks one of the two labels.
TrainResult train_ngram(const LabeledCorpus& corpus, const TrainConfig& config);

/// Full-batch regularized mean loss and its analytic gradient at the given
/// model point. Used by the finite-difference check; kept independent of the
/// SGD loop's incremental updates.
struct LossGradient {
  double loss = 0.0;
  std::vector<double> weight_grad;  // dense, length num_buckets
  double bias_grad = 0.0;
};
LossGradient corpus_loss_gradient(const LabeledCorpus& corpus,
                                  const NgramModel& model, double l2_lambda);

/// For every toxic example and every lexicon word occurrence in it, appends
/// one extra toxic example per enumerated perturbation of that occurrence
/// (first `per_word_cap` in enumeration order, filtered to `ops`; an empty
/// set means all four operators). Originals are retained untouched.
LabeledCorpus augment_adversarial(const LabeledCorpus& corpus,
                                  const Lexicon& lexicon,
                                  const std::set<PerturbationKind>& ops,
                                  std::size_t per_word_cap = 10);

/// Label-flipping poisoning: among examples whose Word tokens contain
/// `target_word` (case-insensitive), flips round(flip_fraction * count)
/// labels, selected by a seeded shuffle. Returns the number of flips via
/// `flipped_out` when non-null; zero matches is a no-op.
LabeledCorpus poison_labels(const LabeledCorpus& corpus,
                            const std::string& target_word,
                            double flip_fraction, std::uint64_t seed,
                            std::size_t* flipped_out = nullptr);

}  // namespace toxkit

#endif  // TOXKIT_TRAIN_HPP
