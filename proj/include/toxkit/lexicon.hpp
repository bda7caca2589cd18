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

#ifndef TOXKIT_LEXICON_HPP
#define TOXKIT_LEXICON_HPP

#include <string>
#include <unordered_map>
#include <unordered_set>

#include "toxkit/scorer.hpp"

namespace toxkit {

/// Per-word toxicity weights. Keys are single lowercase words; weights lie in
/// (0, 1]. `unknown_prior` is the floor score assigned when a text contains
/// an out-of-vocabulary word (see LexiconScorer); 0 disables it.
struct Lexicon {
  std::unordered_map<std::string, double> entries;
  double unknown_prior = 0.0;
};

/// Parses `word<TAB>weight` lines; '#' starts a comment, blank lines are
/// skipped. Throws std::runtime_error with a line number on malformed input.
Lexicon load_lexicon(const std::string& path);

/// Noisy-or scorer over exact lowercase token matches:
///
///   score = max(prior_hit, 1 - prod over matched tokens (1 - weight))
///
/// prior_hit is lexicon.unknown_prior when the text contains at least one
/// alphabetic word of length >= 3 that is missing from the common-word list,
/// else 0. This models detectors that treat unknown or misspelled words as
/// mildly suspicious.
class LexiconScorer : public Scorer {
 public:
  LexiconScorer(Lexicon lexicon, std::unordered_set<std::string> common_words);

  ToxicityScore score(const std::string& text) const override;

  const Lexicon& lexicon() const { return lexicon_; }

 private:
  Lexicon lexicon_;
  std::unordered_set<std::string> common_words_;
};

/// Loads one lowercase word per line; '#' comments and blank lines skipped.
std::unordered_set<std::string> load_common_words(const std::string& path);

}  // namespace toxkit

#endif  // TOXKIT_LEXICON_HPP
