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

#include "toxkit/defense.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "toxkit/edit_distance.hpp"
#include "toxkit/parallel.hpp"
#include "toxkit/util.hpp"

namespace toxkit {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

bool is_single_letter_word(const Token& token) {
  return token.is_word() && codepoint_length(token.text) == 1;
}

bool is_single_space(const Token& token) {
  return token.kind == TokenKind::Separator && token.text == " ";
}

bool is_dot(const Token& token) {
  return token.kind == TokenKind::Separator && token.text == ".";
}

}  // namespace

void Vocabulary::add(const std::string& word, std::uint64_t frequency) {
  if (word.empty() || frequency == 0) {
    throw std::invalid_argument("vocabulary entries need a word and freq >= 1");
  }
  const std::string key = to_lower(word);
  auto [it, inserted] = counts_.emplace(key, frequency);
  if (inserted) {
    words_.push_back(key);
  } else {
    it->second = std::max(it->second, frequency);
  }
}

bool Vocabulary::contains(const std::string& lowercase_word) const {
  return counts_.find(lowercase_word) != counts_.end();
}

std::uint64_t Vocabulary::frequency(const std::string& lowercase_word) const {
  const auto it = counts_.find(lowercase_word);
  return it == counts_.end() ? 0 : it->second;
}

Vocabulary Vocabulary::load(const std::string& path) {
  Vocabulary vocab;
  const auto lines = split_lines(read_file(path));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                               ": expected word<TAB>frequency");
    }
    const std::string word(trim(line.substr(0, tab)));
    std::uint64_t freq = 0;
    try {
      freq = std::stoull(std::string(trim(line.substr(tab + 1))));
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                               ": malformed frequency");
    }
    if (freq == 0) {
      throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                               ": frequency must be >= 1");
    }
    vocab.add(word, freq);
  }
  return vocab;
}

void Vocabulary::save(const std::string& path) const {
  std::map<std::string, std::uint64_t> sorted(counts_.begin(), counts_.end());
  std::string out;
  for (const auto& [word, freq] : sorted) {
    out += word;
    out += '\t';
    out += std::to_string(freq);
    out += '\n';
  }
  write_file(path, out);
}

Vocabulary Vocabulary::build(const LabeledCorpus& corpus,
                             const Lexicon& lexicon) {
  std::map<std::string, std::uint64_t> counts;
  for (const LabeledExample& example : corpus.examples) {
    for (const Token& token : tokenize(example.text).tokens) {
      if (token.is_word()) ++counts[to_lower(token.text)];
    }
  }
  for (const auto& [word, weight] : lexicon.entries) {
    (void)weight;
    counts.emplace(word, 1);
  }
  Vocabulary vocab;
  for (const auto& [word, freq] : counts) vocab.add(word, freq);
  return vocab;
}

Phrase collapse_spacing(const Phrase& phrase) {
  const auto& tokens = phrase.tokens;
  std::string out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    // Try to read a run: letter (" " letter)* starting here.
    if (is_single_letter_word(tokens[i])) {
      std::size_t j = i;
      std::size_t run_words = 1;
      while (j + 2 < tokens.size() && is_single_space(tokens[j + 1]) &&
             is_single_letter_word(tokens[j + 2])) {
        j += 2;
        ++run_words;
      }
      if (run_words >= 3) {
        for (std::size_t k = i; k <= j; k += 2) out += tokens[k].text;
        i = j + 1;
        continue;
      }
    }
    out += tokens[i].text;
    ++i;
  }
  return tokenize(out);
}

namespace {

bool vocab_supports(const Vocabulary& vocab, const std::string& merged) {
  const std::string lowered = to_lower(merged);
  if (vocab.contains(lowered)) return true;
  const std::size_t len = codepoint_length(lowered);
  for (const std::string& word : vocab.words()) {
    const std::size_t wlen = codepoint_length(word);
    if (wlen + 1 < len || len + 1 < wlen) continue;
    if (damerau_levenshtein_capped(lowered, word, 1) <= 1) return true;
  }
  return false;
}

}  // namespace

Phrase merge_dotted(const Phrase& phrase, const Vocabulary& vocab) {
  // Left-to-right single pass over a working token list; a merged word may
  // merge again with the next dotted piece.
  struct Piece {
    bool word;
    std::string text;
  };
  std::vector<Piece> out;
  for (const Token& token : phrase.tokens) {
    out.push_back({token.is_word(), token.text});
    while (out.size() >= 3) {
      const Piece& a = out[out.size() - 3];
      const Piece& dot = out[out.size() - 2];
      const Piece& b = out[out.size() - 1];
      if (!(a.word && b.word && !dot.word && dot.text == ".")) break;
      const std::string merged = a.text + b.text;
      if (!vocab_supports(vocab, merged)) break;
      out.resize(out.size() - 3);
      out.push_back({true, merged});
    }
  }
  std::string source;
  for (const Piece& piece : out) source += piece.text;
  return tokenize(source);
}

std::string spell_correct(const std::string& word, const Vocabulary& vocab,
                          std::size_t max_dist) {
  const std::string lowered = to_lower(word);
  if (vocab.contains(lowered)) return word;

  const std::size_t len = codepoint_length(lowered);
  std::string best;
  std::size_t best_dist = max_dist + 1;
  std::uint64_t best_freq = 0;
  for (const std::string& candidate : vocab.words()) {
    const std::size_t clen = codepoint_length(candidate);
    const std::size_t len_diff = clen > len ? clen - len : len - clen;
    if (len_diff > max_dist) continue;
    const std::size_t dist =
        damerau_levenshtein_capped(lowered, candidate, max_dist);
    if (dist > max_dist) continue;
    const std::uint64_t freq = vocab.frequency(candidate);
    const bool better =
        dist < best_dist ||
        (dist == best_dist &&
         (freq > best_freq || (freq == best_freq && candidate < best)));
    if (better) {
      best = candidate;
      best_dist = dist;
      best_freq = freq;
    }
  }
  return best_dist <= max_dist ? best : word;
}

namespace {

std::string normalize_once(const std::string& text, const Vocabulary& vocab) {
  Phrase phrase = tokenize(text);
  phrase = collapse_spacing(phrase);
  phrase = merge_dotted(phrase, vocab);
  std::string out;
  for (const Token& token : phrase.tokens) {
    out += token.is_word() ? spell_correct(token.text, vocab) : token.text;
  }
  return out;
}

}  // namespace

std::string normalize(const std::string& text, const Vocabulary& vocab) {
  // Iterated to a fixed point: a correction can assemble a new collapsible
  // or mergeable pattern, and idempotence is part of the contract. Every
  // changing pass merges at least one pair, so the word count strictly
  // drops and this terminates.
  std::string current = text;
  for (std::size_t guard = tokenize(text).word_count() + 2; guard > 0;
       --guard) {
    std::string next = normalize_once(current, vocab);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

std::vector<std::string> normalize_batch_serial(
    const std::vector<std::string>& texts, const Vocabulary& vocab) {
  std::vector<std::string> out(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    out[i] = normalize(texts[i], vocab);
  }
  return out;
}

std::vector<std::string> normalize_batch(const std::vector<std::string>& texts,
                                         const Vocabulary& vocab, int jobs) {
  if (resolve_jobs(jobs) == 1) return normalize_batch_serial(texts, vocab);
  std::vector<std::string> out(texts.size());
  parallel_for(texts.size(), jobs,
               [&](std::size_t i) { out[i] = normalize(texts[i], vocab); });
  return out;
}

ToxicityScore DefendedScorer::score(const std::string& text) const {
  return inner_.score(normalize(text, vocab_));
}

void BlockingPolicy::validate() const {
  if (max_failures < 1) throw std::invalid_argument("max failures < 1");
  if (window_s <= 0.0) throw std::invalid_argument("window <= 0");
  if (block_duration_s <= 0.0) throw std::invalid_argument("duration <= 0");
  if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tau not in (0,1)");
}

std::string_view to_string(Decision decision) {
  switch (decision) {
    case Decision::Accepted:
      return "accepted";
    case Decision::Flagged:
      return "flagged";
    case Decision::Blocked:
      return "blocked";
  }
  return "unknown";
}

std::vector<BlockingOutcome> blocking_decide(
    const std::vector<SubmissionEvent>& events, const BlockingPolicy& policy,
    const Scorer& scorer) {
  policy.validate();
  struct UserState {
    std::deque<double> failures;  // timestamps inside the trailing window
    double blocked_until = -1.0;
  };
  std::map<std::string, UserState> users;

  std::vector<BlockingOutcome> outcomes;
  outcomes.reserve(events.size());
  double last_ts = -std::numeric_limits<double>::infinity();
  for (const SubmissionEvent& event : events) {
    if (event.timestamp < last_ts) {
      throw std::invalid_argument("event log timestamps must be non-decreasing");
    }
    last_ts = event.timestamp;

    UserState& state = users[event.user];
    BlockingOutcome outcome;
    outcome.event = event;

    if (event.timestamp < state.blocked_until) {
      outcome.decision = Decision::Blocked;
      outcomes.push_back(std::move(outcome));
      continue;
    }

    outcome.scored = true;
    outcome.score = scorer.score(event.text);
    if (outcome.score > policy.tau) {
      while (!state.failures.empty() &&
             state.failures.front() <= event.timestamp - policy.window_s) {
        state.failures.pop_front();
      }
      state.failures.push_back(event.timestamp);
      if (state.failures.size() >=
          static_cast<std::size_t>(policy.max_failures)) {
        outcome.decision = Decision::Blocked;
        state.blocked_until = event.timestamp + policy.block_duration_s;
        state.failures.clear();
      } else {
        outcome.decision = Decision::Flagged;
      }
    } else {
      outcome.decision = Decision::Accepted;
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

std::vector<SubmissionEvent> load_events(const std::string& path) {
  std::vector<SubmissionEvent> events;
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
    if (!doc.is_object() || !doc.contains("user") || !doc.contains("text") ||
        !doc.contains("ts") || !doc["user"].is_string() ||
        !doc["text"].is_string() || !doc["ts"].is_number()) {
      throw std::runtime_error(
          path + ":" + std::to_string(i + 1) +
          ": expected {\"user\": string, \"text\": string, \"ts\": number}");
    }
    events.push_back(SubmissionEvent{doc["user"].get<std::string>(),
                                     doc["text"].get<std::string>(),
                                     doc["ts"].get<double>()});
  }
  return events;
}

std::string serialize_outcomes(const std::vector<BlockingOutcome>& outcomes) {
  std::string out;
  for (const BlockingOutcome& outcome : outcomes) {
    ordered_json line;
    line["user"] = outcome.event.user;
    line["ts"] = outcome.event.timestamp;
    line["decision"] = std::string(to_string(outcome.decision));
    if (outcome.scored) line["score"] = outcome.score;
    out += line.dump();
    out += '\n';
  }
  return out;
}

}  // namespace toxkit
