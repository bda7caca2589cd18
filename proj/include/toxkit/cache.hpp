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

#ifndef TOXKIT_CACHE_HPP
#define TOXKIT_CACHE_HPP

#include <atomic>
#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>

#include "toxkit/scorer.hpp"

namespace toxkit {

/// Memoizing wrapper that counts unique queries. The counter increments only
/// on cache misses, i.e. it is the number of distinct texts the inner scorer
/// has actually been asked about — the attack's query cost. Thread-safe;
/// concurrent misses on the same key may both hit the inner scorer, with
/// last-writer-wins memoization (local scorers are deterministic, so the
/// stored value is the same either way).
class CountingCache : public Scorer {
 public:
  explicit CountingCache(const Scorer& inner) : inner_(inner) {}

  ToxicityScore score(const std::string& text) const override;

  std::uint64_t query_count() const { return misses_.load(); }
  void reset();

 private:
  const Scorer& inner_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, ToxicityScore> memo_;
  mutable std::atomic<std::uint64_t> misses_{0};
};

}  // namespace toxkit

#endif  // TOXKIT_CACHE_HPP
