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

#ifndef TOXKIT_DEFENSE_HPP
#define TOXKIT_DEFENSE_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "toxkit/lexicon.hpp"
#include "toxkit/scorer.hpp"
#include "toxkit/text.hpp"
#include "toxkit/train.hpp"

namespace toxkit {

/// Reference vocabulary for the spell-check defense: lowercase words with
/// corpus frequencies (>= 1). Must cover all lexicon words and every Word
/// token of the training corpus, otherwise normalization would "correct"
/// legitimate text.
class Vocabulary {
 public:
  Vocabulary() = default;

  void add(const std::string& word, std::uint64_t frequency);
  bool contains(const std::string& lowercase_word) const;
  std::uint64_t frequency(const std::string& lowercase_word) const;
  std::size_t size() const { return counts_.size(); }
  const std::vector<std::string>& words() const { return words_; }

  /// word<TAB>frequency lines, '#' comments allowed.
  static Vocabulary load(const std::string& path);
  void save(const std::string& path) const;

  /// Corpus word counts plus every lexicon word (at least frequency 1).
  static Vocabulary build(const LabeledCorpus& corpus, const Lexicon& lexicon);

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
  std::vector<std::string> words_;  // insertion order; scan order for ties
};

/// Merges every maximal run of >= 3 single-letter Word tokens separated by
/// single spaces into one Word ("S c r e w you" -> "Screw you"); shorter
/// runs stay untouched.
Phrase collapse_spacing(const Phrase& phrase);

/// For adjacent Word tokens separated by exactly ".", merges the pair when
/// the concatenation is a vocab word or within Damerau-Levenshtein distance
/// 1 of one. Left-to-right single pass; a merged token may keep merging with
/// what follows ("st.upid" -> "stupid").
Phrase merge_dotted(const Phrase& phrase, const Vocabulary& vocab);

/// Vocabulary words win ties by (smaller distance, higher frequency,
/// lexicographic). In-vocabulary input comes back unchanged; inputs with no
/// vocab word within `max_dist` come back unchanged too.
std::string spell_correct(const std::string& word, const Vocabulary& vocab,
                          std::size_t max_dist = 2);

/// Full de-obfuscation pipeline: tokenize, collapse spacing, merge dotted
/// pairs, spell-correct each word, detokenize. Deterministic and idempotent
/// on its own output.
std::string normalize(const std::string& text, const Vocabulary& vocab);

/// Serial reference for the OpenMP batch path.
std::vector<std::string> normalize_batch_serial(
    const std::vector<std::string>& texts, const Vocabulary& vocab);
std::vector<std::string> normalize_batch(const std::vector<std::string>& texts,
                                         const Vocabulary& vocab, int jobs);

/// scorer.score(normalize(text)) — the spell-check defense in front of any
/// scorer.
class DefendedScorer : public Scorer {
 public:
  DefendedScorer(const Scorer& inner, const Vocabulary& vocab)
      : inner_(inner), vocab_(vocab) {}
  ToxicityScore score(const std::string& text) const override;

 private:
  const Scorer& inner_;
  const Vocabulary& vocab_;
};

// -- suspicious-user blocking --

struct BlockingPolicy {
  int max_failures = 3;          // Nth failure inside the window blocks
  double window_s = 3600.0;      // trailing window W
  double block_duration_s = 86400.0;  // block duration T
  ToxicityScore tau = 0.5;       // failure = score > tau

  void validate() const;  // throws std::invalid_argument
};

struct SubmissionEvent {
  std::string user;
  std::string text;
  double timestamp = 0.0;  // seconds; non-decreasing across the log
};

enum class Decision { Accepted, Flagged, Blocked };
std::string_view to_string(Decision decision);

struct BlockingOutcome {
  SubmissionEvent event;
  Decision decision;
  bool scored = false;        // blocked events are never scored
  ToxicityScore score = 0.0;  // valid when scored
};

/// Replays a time-ordered event log against the policy. Failures are counted
/// per user over the trailing window; the Nth failure blocks the user for T
/// seconds (the blocking event itself is marked Blocked). Blocked users'
/// events are not scored and consume no queries; the block lifts exactly at
/// block_start + T. Throws std::invalid_argument on out-of-order timestamps.
std::vector<BlockingOutcome> blocking_decide(
    const std::vector<SubmissionEvent>& events, const BlockingPolicy& policy,
    const Scorer& scorer);

/// JSON-lines {user, text, ts} per line.
std::vector<SubmissionEvent> load_events(const std::string& path);
/// JSON-lines {user, ts, decision, score?} per outcome.
std::string serialize_outcomes(const std::vector<BlockingOutcome>& outcomes);

}  // namespace toxkit

#endif  // TOXKIT_DEFENSE_HPP
