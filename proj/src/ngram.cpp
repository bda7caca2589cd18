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

#include "toxkit/ngram.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <utility>

#include "toxkit/text.hpp"
#include "toxkit/util.hpp"

namespace toxkit {

namespace {

constexpr char kMagic[8] = {'T', 'O', 'X', 'N', 'G', 'R', 'M', '1'};

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
}

void put_f64(std::string& out, double v) {
  std::uint64_t bits = 0;
  static_assert(sizeof(bits) == sizeof(v));
  std::memcpy(&bits, &v, sizeof(bits));
  put_u64(out, bits);
}

class Reader {
 public:
  explicit Reader(const std::string& bytes) : bytes_(bytes) {}

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      v |= static_cast<std::uint32_t>(
               static_cast<unsigned char>(bytes_[pos_ + i]))
           << (8 * i);
    }
    pos_ += 4;
    return v;
  }

  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
      v |= static_cast<std::uint64_t>(
               static_cast<unsigned char>(bytes_[pos_ + i]))
           << (8 * i);
    }
    pos_ += 8;
    return v;
  }

  double f64() {
    const std::uint64_t bits = u64();
    double v = 0.0;
    std::memcpy(&v, &bits, sizeof(v));
    return v;
  }

  void raw(char* dst, std::size_t n) {
    need(n);
    std::memcpy(dst, bytes_.data() + pos_, n);
    pos_ += n;
  }

  bool done() const { return pos_ == bytes_.size(); }

 private:
  void need(std::size_t n) const {
    if (pos_ + n > bytes_.size()) {
      throw std::runtime_error("model file truncated");
    }
  }

  const std::string& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

void NgramModel::validate() const {
  if (n_set.empty()) throw std::invalid_argument("model: empty n_set");
  for (int n : n_set) {
    if (n < 1 || n > 16) throw std::invalid_argument("model: bad n in n_set");
  }
  if (num_buckets == 0) throw std::invalid_argument("model: zero buckets");
  if (weights.size() != num_buckets) {
    throw std::invalid_argument("model: weights length != num_buckets");
  }
  if (!std::isfinite(bias)) throw std::invalid_argument("model: bias not finite");
  for (double w : weights) {
    if (!std::isfinite(w)) {
      throw std::invalid_argument("model: non-finite weight");
    }
  }
}

std::map<std::uint64_t, std::uint32_t> ngram_features(
    const std::string& text, const std::vector<int>& n_set,
    std::uint64_t num_buckets) {
  std::map<std::uint64_t, std::uint32_t> counts;
  const Phrase phrase = tokenize(text);
  for (const Token& token : phrase.tokens) {
    if (!token.is_word()) continue;
    const std::string padded = "#" + to_lower(token.text) + "#";
    for (int n : n_set) {
      if (padded.size() < static_cast<std::size_t>(n)) continue;
      for (std::size_t i = 0; i + n <= padded.size(); ++i) {
        const std::uint64_t bucket =
            fnv1a64(std::string_view(padded).substr(i, n)) % num_buckets;
        ++counts[bucket];
      }
    }
  }
  return counts;
}

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

ToxicityScore ngram_score(const std::string& text, const NgramModel& model) {
  double z = model.bias;
  for (const auto& [bucket, count] :
       ngram_features(text, model.n_set, model.num_buckets)) {
    z += static_cast<double>(count) * model.weights[bucket];
  }
  return logistic(z);
}

NgramScorer::NgramScorer(NgramModel model) : model_(std::move(model)) {
  model_.validate();
}

ToxicityScore NgramScorer::score(const std::string& text) const {
  return ngram_score(text, model_);
}

std::string serialize_model(const NgramModel& model) {
  model.validate();
  std::string out;
  out.reserve(40 + model.weights.size() * 8);
  out.append(kMagic, sizeof(kMagic));
  put_u64(out, model.seed);
  put_u32(out, static_cast<std::uint32_t>(model.n_set.size()));
  for (int n : model.n_set) put_u32(out, static_cast<std::uint32_t>(n));
  put_u64(out, model.num_buckets);
  put_f64(out, model.bias);
  for (double w : model.weights) put_f64(out, w);
  return out;
}

NgramModel parse_model(const std::string& bytes) {
  Reader r(bytes);
  char magic[8];
  r.raw(magic, sizeof(magic));
  if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw std::runtime_error("not a toxkit ngram model file");
  }
  NgramModel model;
  model.seed = r.u64();
  const std::uint32_t n_count = r.u32();
  if (n_count == 0 || n_count > 16) {
    throw std::runtime_error("model file: bad n_set size");
  }
  model.n_set.clear();
  for (std::uint32_t i = 0; i < n_count; ++i) {
    model.n_set.push_back(static_cast<int>(r.u32()));
  }
  model.num_buckets = r.u64();
  if (model.num_buckets > (1ull << 28)) {
    throw std::runtime_error("model file: implausible bucket count");
  }
  model.bias = r.f64();
  model.weights.resize(model.num_buckets);
  for (auto& w : model.weights) w = r.f64();
  if (!r.done()) throw std::runtime_error("model file: trailing bytes");
  model.validate();
  return model;
}

void save_model(const NgramModel& model, const std::string& path) {
  write_file(path, serialize_model(model));
}

NgramModel load_model(const std::string& path) {
  return parse_model(read_file(path));
}

}  // namespace toxkit
