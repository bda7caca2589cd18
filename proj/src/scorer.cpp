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

#include "toxkit/scorer.hpp"

#include <cmath>
#include <cstdio>

#include "toxkit/parallel.hpp"

namespace toxkit {

double clamp01(double value) {
  if (std::isnan(value)) return 0.0;
  if (value < 0.0) return 0.0;
  if (value > 1.0) return 1.0;
  return value;
}

std::string format_percent(ToxicityScore score) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.0f%%", score * 100.0);
  return buf;
}

std::vector<ToxicityScore> score_batch_serial(
    const Scorer& scorer, const std::vector<std::string>& texts) {
  std::vector<ToxicityScore> out(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    out[i] = scorer.score(texts[i]);
  }
  return out;
}

std::vector<ToxicityScore> score_batch(const Scorer& scorer,
                                       const std::vector<std::string>& texts,
                                       int jobs) {
  if (resolve_jobs(jobs) == 1) return score_batch_serial(scorer, texts);
  std::vector<ToxicityScore> out(texts.size());
  parallel_for(texts.size(), jobs,
               [&](std::size_t i) { out[i] = scorer.score(texts[i]); });
  return out;
}

}  // namespace toxkit
