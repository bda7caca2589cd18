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

#include "toxkit/attack.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "toxkit/parallel.hpp"
#include "toxkit/util.hpp"

namespace toxkit {

namespace {

using ordered_json = nlohmann::ordered_json;

/// Phrase text with Word `word_index` removed along with its following
/// separator (or the preceding one when the word is last).
std::string delete_word(const Phrase& phrase, std::size_t word_index) {
  const std::size_t ti = phrase.word_token_index(word_index);
  std::size_t drop_sep =
      ti + 1 < phrase.tokens.size() ? ti + 1 : (ti > 0 ? ti - 1 : ti);
  std::string out;
  for (std::size_t i = 0; i < phrase.tokens.size(); ++i) {
    if (i == ti || (drop_sep != ti && i == drop_sep)) continue;
    out += phrase.tokens[i].text;
  }
  return out;
}

}  // namespace

void AttackConfig::validate() const {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw std::invalid_argument("tau must be in (0,1)");
  }
  if (query_budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (min_improvement < 0.0) {
    throw std::invalid_argument("min improvement must be >= 0");
  }
}

void TransferDictionary::record(const std::string& word,
                                const PerturbationOp& op,
                                const std::string& replacement, double drop) {
  const std::string key = to_lower(word);
  const auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, TransferEntry{op, replacement, drop, 1});
    return;
  }
  it->second.hits += 1;
  if (drop > it->second.drop) {
    it->second.op = op;
    it->second.replacement = replacement;
    it->second.drop = drop;
  }
}

std::optional<TransferEntry> TransferDictionary::lookup(
    const std::string& word) const {
  const auto it = entries_.find(to_lower(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void TransferDictionary::merge(const TransferDictionary& other) {
  for (const auto& [word, entry] : other.entries_) {
    const auto it = entries_.find(word);
    if (it == entries_.end()) {
      entries_.emplace(word, entry);
      continue;
    }
    it->second.hits += entry.hits;
    if (entry.drop > it->second.drop) {
      it->second.op = entry.op;
      it->second.replacement = entry.replacement;
      it->second.drop = entry.drop;
    }
  }
}

std::string TransferDictionary::serialize() const {
  ordered_json arr = ordered_json::array();
  for (const auto& [word, entry] : entries_) {
    ordered_json item;
    item["word"] = word;
    item["op"] = std::string(to_string(entry.op.kind));
    item["pos"] = entry.op.pos;
    item["replacement"] = entry.replacement;
    item["drop"] = entry.drop;
    item["hits"] = entry.hits;
    arr.push_back(std::move(item));
  }
  return arr.dump(2) + "\n";
}

TransferDictionary TransferDictionary::parse(const std::string& json_text) {
  TransferDictionary dict;
  const auto doc = ordered_json::parse(json_text);
  if (!doc.is_array()) {
    throw std::runtime_error("transfer dictionary: expected a JSON array");
  }
  for (const auto& item : doc) {
    TransferEntry entry;
    entry.op.kind = perturbation_kind_from_string(
        item.at("op").get<std::string>());
    entry.op.pos = item.at("pos").get<std::size_t>();
    entry.replacement = item.at("replacement").get<std::string>();
    entry.drop = item.at("drop").get<double>();
    entry.hits = item.at("hits").get<std::uint64_t>();
    dict.entries_[to_lower(item.at("word").get<std::string>())] = entry;
  }
  return dict;
}

TransferDictionary TransferDictionary::load(const std::string& path) {
  return parse(read_file(path));
}

void TransferDictionary::save(const std::string& path) const {
  write_file(path, serialize());
}

std::string TransferDictionary::state_hash() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(serialize())));
  return buf;
}

std::vector<std::pair<std::size_t, double>> word_importance(
    const Phrase& phrase, const Scorer& scorer) {
  const std::size_t words = phrase.word_count();
  if (words == 0) {
    throw std::invalid_argument("word_importance: phrase has no words");
  }
  const double base = scorer.score(phrase.source);
  std::vector<std::pair<std::size_t, double>> ranked;
  ranked.reserve(words);
  for (std::size_t i = 0; i < words; ++i) {
    ranked.emplace_back(i, base - scorer.score(delete_word(phrase, i)));
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second > b.second;
                     return a.first < b.first;
                   });
  return ranked;
}

AttackResult greedy_attack(const Phrase& phrase, const Scorer& scorer,
                           const AttackConfig& config,
                           TransferDictionary& dict) {
  config.validate();
  CountingCache cache(scorer);

  AttackResult result;
  result.original_text = phrase.source;
  result.original_score = cache.score(phrase.source);
  result.trajectory.push_back(result.original_score);

  Phrase current = phrase;
  double current_score = result.original_score;

  auto finish = [&]() {
    result.final_text = current.source;
    result.final_score = current_score;
    result.success = current_score <= config.tau;
    result.queries = cache.query_count();
    return result;
  };

  if (current_score <= config.tau) return finish();
  if (phrase.word_count() == 0) return finish();

  const auto ranked = word_importance(phrase, cache);

  // Word indices shift when a committed edit changes the word count (dot
  // splits, space-outs); slot[i] tracks where original word i lives now.
  std::vector<std::size_t> slot(phrase.word_count());
  for (std::size_t i = 0; i < slot.size(); ++i) slot[i] = i;

  std::uint64_t budget_left = config.query_budget;
  // Scores a candidate phrase, charging the budget only for cache misses.
  // Returns nullopt once the budget cannot cover another miss.
  auto budgeted_score = [&](const std::string& text) -> std::optional<double> {
    if (budget_left == 0) return std::nullopt;
    const std::uint64_t before = cache.query_count();
    const double s = cache.score(text);
    const std::uint64_t spent = cache.query_count() - before;
    result.candidate_queries += spent;
    budget_left -= spent;
    return s;
  };

  for (const auto& [orig_index, importance] : ranked) {
    (void)importance;
    if (budget_left == 0) break;
    if (config.max_perturbed_words != 0 &&
        result.edits.size() >= config.max_perturbed_words) {
      break;
    }
    const std::size_t word_index = slot[orig_index];
    const std::string word = current.word(word_index).text;

    std::optional<PerturbationOp> chosen_op;
    std::string chosen_replacement;
    double chosen_score = current_score;

    // Transfer dictionary first: one query instead of a full enumeration.
    if (const auto entry = dict.lookup(word)) {
      try {
        const std::string replacement =
            apply_perturbation(entry->op, word);
        const Phrase candidate =
            replace_word(current, word_index, replacement);
        if (const auto s = budgeted_score(candidate.source)) {
          if (current_score - *s > config.min_improvement) {
            chosen_op = entry->op;
            chosen_replacement = replacement;
            chosen_score = *s;
          }
        }
      } catch (const std::exception&) {
        // Entry does not apply to this casing/length; fall through.
      }
    }

    if (!chosen_op && is_alphabetic_word(word)) {
      for (const auto& [op, replacement] : enumerate_perturbations(word)) {
        const Phrase candidate =
            replace_word(current, word_index, replacement);
        const auto s = budgeted_score(candidate.source);
        if (!s) break;  // budget exhausted mid-enumeration
        if (*s < chosen_score) {  // strict: ties keep enumeration order
          chosen_op = op;
          chosen_replacement = replacement;
          chosen_score = *s;
        }
      }
      if (chosen_op &&
          !(current_score - chosen_score > config.min_improvement)) {
        chosen_op.reset();
      }
    }

    if (!chosen_op) continue;

    const double drop = current_score - chosen_score;
    current = replace_word(current, word_index, chosen_replacement);
    const std::size_t replacement_words =
        tokenize(chosen_replacement).word_count();
    for (std::size_t i = 0; i < slot.size(); ++i) {
      if (slot[i] > word_index) slot[i] += replacement_words - 1;
    }

    result.edits.push_back(
        AppliedEdit{word_index, word, *chosen_op, chosen_replacement});
    result.trajectory.push_back(chosen_score);
    current_score = chosen_score;
    dict.record(word, *chosen_op, chosen_replacement, drop);

    if (current_score <= config.tau) break;
  }

  return finish();
}

NegationProbe negation_probe(const Phrase& phrase, const Scorer& scorer) {
  const auto ranked = word_importance(phrase, scorer);
  if (ranked.empty() || ranked.front().second <= 0.0) {
    throw std::runtime_error(
        "negation probe: no word contributes to the score");
  }
  NegationProbe probe;
  probe.target_word_index = ranked.front().first;
  probe.original_score = scorer.score(phrase.source);
  const Phrase negated = insert_negation(phrase, probe.target_word_index);
  probe.negated_text = negated.source;
  probe.negated_score = scorer.score(negated.source);
  return probe;
}

std::vector<AttackResult> attack_corpus(const std::vector<std::string>& texts,
                                        const Scorer& scorer,
                                        const AttackConfig& config,
                                        TransferDictionary& dict, int jobs) {
  std::vector<AttackResult> results(texts.size());
  if (resolve_jobs(jobs) == 1) {
    for (std::size_t i = 0; i < texts.size(); ++i) {
      results[i] = greedy_attack(tokenize(texts[i]), scorer, config, dict);
    }
    return results;
  }

  const TransferDictionary snapshot = dict;
  std::vector<TransferDictionary> updates(texts.size());
  parallel_for(texts.size(), jobs, [&](std::size_t i) {
    TransferDictionary local = snapshot;
    results[i] = greedy_attack(tokenize(texts[i]), scorer, config, local);
    updates[i] = std::move(local);
  });
  for (const TransferDictionary& update : updates) dict.merge(update);
  return results;
}

}  // namespace toxkit
