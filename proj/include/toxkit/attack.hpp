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

#ifndef TOXKIT_ATTACK_HPP
#define TOXKIT_ATTACK_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toxkit/cache.hpp"
#include "toxkit/perturb.hpp"
#include "toxkit/scorer.hpp"
#include "toxkit/text.hpp"

namespace toxkit {

struct AttackConfig {
  ToxicityScore tau = 0.5;        // success threshold: final score <= tau
  std::uint64_t query_budget = 500;  // candidate-phase query limit
  double min_improvement = 1e-9;  // an edit must beat this to be committed
  std::size_t max_perturbed_words = 0;  // 0 = unlimited

  void validate() const;  // throws std::invalid_argument
};

/// One committed edit. `word_index` addresses the Word tokens of the phrase
/// *at the moment the edit was applied*, so replaying the edits in order with
/// replace_word reproduces the final phrase even when earlier edits changed
/// the word count (a dot split or a space-out does).
struct AppliedEdit {
  std::size_t word_index;
  std::string original_word;
  PerturbationOp op;
  std::string replacement;
};

struct AttackResult {
  std::string original_text;
  ToxicityScore original_score = 0.0;
  std::string final_text;
  ToxicityScore final_score = 0.0;
  bool success = false;          // final_score <= tau
  std::uint64_t queries = 0;     // total distinct scorer queries (cache misses)
  std::uint64_t candidate_queries = 0;  // the budget-limited portion
  std::vector<AppliedEdit> edits;
  std::vector<ToxicityScore> trajectory;  // original score, then one per commit
};

/// Known-good perturbation for a word, shared across phrases.
struct TransferEntry {
  PerturbationOp op;
  std::string replacement;
  double drop = 0.0;   // best observed score drop
  std::uint64_t hits = 1;
};

/// word (lowercase) -> best known score-reducing perturbation. `record`
/// keeps the entry with the larger observed drop and sums hit counts, which
/// makes `merge` commutative and associative.
class TransferDictionary {
 public:
  void record(const std::string& word, const PerturbationOp& op,
              const std::string& replacement, double drop);
  std::optional<TransferEntry> lookup(const std::string& word) const;
  void merge(const TransferDictionary& other);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<std::string, TransferEntry>& entries() const {
    return entries_;
  }

  /// JSON array of {word, op, pos, replacement, drop, hits} sorted by word
  /// with stable key order, for diff-able persistence.
  std::string serialize() const;
  static TransferDictionary parse(const std::string& json_text);
  static TransferDictionary load(const std::string& path);
  void save(const std::string& path) const;

  /// FNV-1a-64 of the serialized state, hex-encoded; reports echo this.
  std::string state_hash() const;

 private:
  std::map<std::string, TransferEntry> entries_;
};

/// Deletion-based word importance: importance(i) = score(phrase) -
/// score(phrase without Word i and one adjacent separator). Sorted by
/// importance descending, ties by ascending word index. Costs
/// word_count + 1 distinct queries on a cold cache.
std::vector<std::pair<std::size_t, double>> word_importance(
    const Phrase& phrase, const Scorer& scorer);

/// Greedy query-budgeted attack: rank words by importance, then per word try
/// the transfer dictionary first and otherwise the full candidate
/// enumeration, committing the best strictly-improving edit; stop as soon as
/// the score falls to tau or below, or words/budget run out. All scoring
/// goes through an internal CountingCache; only the candidate phase is
/// budget-limited (importance costs word_count + 1 on top). Committed edits
/// are recorded into `dict`.
AttackResult greedy_attack(const Phrase& phrase, const Scorer& scorer,
                           const AttackConfig& config,
                           TransferDictionary& dict);

/// Scores the phrase and its negation ("not" inserted before the
/// highest-importance word). Throws std::runtime_error when no word has
/// positive importance (nothing to negate against).
struct NegationProbe {
  ToxicityScore original_score;
  ToxicityScore negated_score;
  std::string negated_text;
  std::size_t target_word_index;
};
NegationProbe negation_probe(const Phrase& phrase, const Scorer& scorer);

/// Attacks each phrase. jobs == 1 runs sequentially with the dictionary
/// evolving phrase-to-phrase (maximum transfer reuse). jobs != 1 attacks
/// phrases in parallel against a snapshot of the dictionary and merges the
/// per-phrase updates at the end; results are in input order either way.
std::vector<AttackResult> attack_corpus(const std::vector<std::string>& texts,
                                        const Scorer& scorer,
                                        const AttackConfig& config,
                                        TransferDictionary& dict, int jobs);

}  // namespace toxkit

#endif  // TOXKIT_ATTACK_HPP
