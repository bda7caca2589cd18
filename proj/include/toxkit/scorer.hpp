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

#ifndef TOXKIT_SCORER_HPP
#define TOXKIT_SCORER_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace toxkit {

/// A toxicity score is a real in [0, 1]; the demo-style output renders it as
/// a percentage. Comparisons always use the exact value.
using ToxicityScore = double;

double clamp01(double value);

/// "84%"-style rendering used by reports.
std::string format_percent(ToxicityScore score);

/// The black-box oracle the attack queries. Local implementations are
/// deterministic and total; the remote client throws RemoteError.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual ToxicityScore score(const std::string& text) const = 0;
};

/// Serial reference for batch scoring; the OpenMP variant in parallel.hpp is
/// tested against this.
std::vector<ToxicityScore> score_batch_serial(
    const Scorer& scorer, const std::vector<std::string>& texts);

/// Scores texts[i] -> result[i], splitting work across `jobs` threads.
/// jobs == 1 uses the serial path; jobs == 0 means "use all cores".
std::vector<ToxicityScore> score_batch(const Scorer& scorer,
                                       const std::vector<std::string>& texts,
                                       int jobs);

}  // namespace toxkit

#endif  // TOXKIT_SCORER_HPP
