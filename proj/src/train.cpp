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

#include "toxkit/train.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "toxkit/text.hpp"
#include "toxkit/util.hpp"

namespace toxkit {

namespace {

using nlohmann::json;

// Numerically stable -log p(y | z): log(1 + e^-|z|) + max(0, -yz-ish form).
double logistic_loss(double z, bool toxic) {
  const double margin = toxic ? z : -z;
  if (margin > 0) return std::log1p(std::exp(-margin));
  return -margin + std::log1p(std::exp(margin));
}

}  // namespace

LabeledCorpus load_corpus(const std::string& path) {
  LabeledCorpus corpus;
  corpus.provenance = path;
  const auto lines = split_lines(read_file(path));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    json doc;
    try {
      doc = json::parse(lines[i]);
    } catch (const json::parse_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                               ": malformed JSON line: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("text") || !doc.contains("toxic") ||
        !doc["text"].is_string() || !doc["toxic"].is_boolean()) {
      throw std::runtime_error(
          path + ":" + std::to_string(i + 1) +
          ": expected {\"text\": string, \"toxic\": bool}");
    }
    LabeledExample example;
    example.text = doc["text"].get<std::string>();
    example.toxic = doc["toxic"].get<bool>();
    if (example.text.empty()) {
      throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                               ": empty text");
    }
    corpus.examples.push_back(std::move(example));
  }
  return corpus;
}

std::string serialize_corpus(const LabeledCorpus& corpus) {
  std::string out;
  for (const LabeledExample& example : corpus.examples) {
    json line;
    line["text"] = example.text;
    line["toxic"] = example.toxic;
    out += line.dump();
    out += '\n';
  }
  return out;
}

void save_corpus(const LabeledCorpus& corpus, const std::string& path) {
  write_file(path, serialize_corpus(corpus));
}

void TrainConfig::validate() const {
  if (learning_rate <= 0.0) throw std::invalid_argument("learning rate <= 0");
  if (epochs < 1) throw std::invalid_argument("epochs < 1");
  if (l2_lambda < 0.0) throw std::invalid_argument("l2 lambda < 0");
  if (n_set.empty()) throw std::invalid_argument("empty n_set");
  if (num_buckets == 0) throw std::invalid_argument("zero buckets");
}

TrainResult train_ngram(const LabeledCorpus& corpus,
                        const TrainConfig& config) {
  config.validate();
  bool has_toxic = false;
  bool has_benign = false;
  for (const LabeledExample& e : corpus.examples) {
    (e.toxic ? has_toxic : has_benign) = true;
  }
  if (!has_toxic || !has_benign) {
    throw std::invalid_argument(
        "training corpus must contain both toxic and benign examples");
  }

  NgramModel model;
  model.n_set = config.n_set;
  model.num_buckets = config.num_buckets;
  model.seed = config.seed;
  model.weights.assign(model.num_buckets, 0.0);
  model.bias = 0.0;

  // Features never change across epochs; extract once.
  std::vector<std::map<std::uint64_t, std::uint32_t>> features;
  features.reserve(corpus.examples.size());
  for (const LabeledExample& e : corpus.examples) {
    features.push_back(ngram_features(e.text, model.n_set, model.num_buckets));
  }

  std::vector<std::size_t> order(corpus.examples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  TrainResult result;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    // One generator stream per epoch, derived from the config seed.
    seeded_shuffle_indices(order, config.seed + static_cast<std::uint64_t>(epoch));
    for (const std::size_t idx : order) {
      double z = model.bias;
      for (const auto& [bucket, count] : features[idx]) {
        z += static_cast<double>(count) * model.weights[bucket];
      }
      const double p = logistic(z);
      const double g = p - (corpus.examples[idx].toxic ? 1.0 : 0.0);
      for (const auto& [bucket, count] : features[idx]) {
        model.weights[bucket] -=
            config.learning_rate * (g * static_cast<double>(count) +
                                    config.l2_lambda * model.weights[bucket]);
      }
      model.bias -= config.learning_rate * g;
    }

    double loss = 0.0;
    for (std::size_t i = 0; i < corpus.examples.size(); ++i) {
      double z = model.bias;
      for (const auto& [bucket, count] : features[i]) {
        z += static_cast<double>(count) * model.weights[bucket];
      }
      loss += logistic_loss(z, corpus.examples[i].toxic);
    }
    loss /= static_cast<double>(corpus.examples.size());
    double reg = 0.0;
    for (double w : model.weights) reg += w * w;
    loss += 0.5 * config.l2_lambda * reg;
    result.epoch_losses.push_back(loss);
  }

  result.model = std::move(model);
  return result;
}

LossGradient corpus_loss_gradient(const LabeledCorpus& corpus,
                                  const NgramModel& model, double l2_lambda) {
  model.validate();
  if (corpus.examples.empty()) {
    throw std::invalid_argument("empty corpus");
  }
  LossGradient out;
  out.weight_grad.assign(model.num_buckets, 0.0);
  const double inv_n = 1.0 / static_cast<double>(corpus.examples.size());
  for (const LabeledExample& example : corpus.examples) {
    const auto feats =
        ngram_features(example.text, model.n_set, model.num_buckets);
    double z = model.bias;
    for (const auto& [bucket, count] : feats) {
      z += static_cast<double>(count) * model.weights[bucket];
    }
    const double p = logistic(z);
    const double g = (p - (example.toxic ? 1.0 : 0.0)) * inv_n;
    for (const auto& [bucket, count] : feats) {
      out.weight_grad[bucket] += g * static_cast<double>(count);
    }
    out.bias_grad += g;
    out.loss += logistic_loss(z, example.toxic) * inv_n;
  }
  double reg = 0.0;
  for (std::size_t b = 0; b < model.num_buckets; ++b) {
    reg += model.weights[b] * model.weights[b];
    out.weight_grad[b] += l2_lambda * model.weights[b];
  }
  out.loss += 0.5 * l2_lambda * reg;
  return out;
}

LabeledCorpus augment_adversarial(const LabeledCorpus& corpus,
                                  const Lexicon& lexicon,
                                  const std::set<PerturbationKind>& ops,
                                  std::size_t per_word_cap) {
  LabeledCorpus out = corpus;
  for (const LabeledExample& example : corpus.examples) {
    if (!example.toxic) continue;
    const Phrase phrase = tokenize(example.text);
    std::size_t word_index = 0;
    for (const Token& token : phrase.tokens) {
      if (!token.is_word()) continue;
      const std::size_t this_word = word_index++;
      if (lexicon.entries.find(to_lower(token.text)) ==
          lexicon.entries.end()) {
        continue;
      }
      if (!is_alphabetic_word(token.text)) continue;
      std::size_t emitted = 0;
      for (const auto& [op, replacement] :
           enumerate_perturbations(token.text)) {
        if (!ops.empty() && ops.find(op.kind) == ops.end()) continue;
        if (emitted == per_word_cap) break;
        LabeledExample variant;
        variant.text =
            replace_word(phrase, this_word, replacement).source;
        variant.toxic = true;
        out.examples.push_back(std::move(variant));
        ++emitted;
      }
    }
  }
  return out;
}

LabeledCorpus poison_labels(const LabeledCorpus& corpus,
                            const std::string& target_word,
                            double flip_fraction, std::uint64_t seed,
                            std::size_t* flipped_out) {
  if (flip_fraction < 0.0 || flip_fraction > 1.0) {
    throw std::invalid_argument("flip fraction must be in [0,1]");
  }
  const std::string target = to_lower(target_word);
  LabeledCorpus out = corpus;

  std::vector<std::size_t> matching;
  for (std::size_t i = 0; i < out.examples.size(); ++i) {
    const Phrase phrase = tokenize(out.examples[i].text);
    for (const Token& token : phrase.tokens) {
      if (token.is_word() && to_lower(token.text) == target) {
        matching.push_back(i);
        break;
      }
    }
  }

  // round() half-up on the matching count.
  const std::size_t flips = static_cast<std::size_t>(std::floor(
      flip_fraction * static_cast<double>(matching.size()) + 0.5));
  seeded_shuffle_indices(matching, seed);
  for (std::size_t k = 0; k < flips; ++k) {
    out.examples[matching[k]].toxic = !out.examples[matching[k]].toxic;
  }
  if (flipped_out != nullptr) *flipped_out = flips;
  return out;
}

}  // namespace toxkit
