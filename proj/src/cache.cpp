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

#include "toxkit/cache.hpp"

namespace toxkit {

ToxicityScore CountingCache::score(const std::string& text) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = memo_.find(text);
    if (it != memo_.end()) return it->second;
  }
  // Deliberately scored outside the lock: a remote inner scorer may block for
  // a long time and must not serialize unrelated lookups.
  const ToxicityScore value = inner_.score(text);
  bool inserted = false;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    inserted = memo_.insert_or_assign(text, value).second;
  }
  if (inserted) misses_.fetch_add(1);
  return value;
}

void CountingCache::reset() {
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.clear();
  misses_.store(0);
}

}  // namespace toxkit
