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

#include "toxkit/lexicon.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

#include "toxkit/text.hpp"
#include "toxkit/util.hpp"

namespace toxkit {

namespace {

double parse_weight(std::string_view field, const std::string& path,
                    std::size_t line_no) {
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto res = std::from_chars(field.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end) {
    throw std::runtime_error(path + ":" + std::to_string(line_no) +
                             ": malformed weight \"" + std::string(field) +
                             "\"");
  }
  return value;
}

}  // namespace

Lexicon load_lexicon(const std::string& path) {
  Lexicon lexicon;
  const auto lines = split_lines(read_file(path));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                               ": expected word<TAB>weight");
    }
    const std::string word = to_lower(trim(line.substr(0, tab)));
    const double weight = parse_weight(trim(line.substr(tab + 1)), path, i + 1);
    if (word.empty() || weight <= 0.0 || weight > 1.0) {
      throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                               ": weight must be in (0,1] and word non-empty");
    }
    lexicon.entries[word] = weight;
  }
  return lexicon;
}

std::unordered_set<std::string> load_common_words(const std::string& path) {
  std::unordered_set<std::string> words;
  for (const std::string& line : read_data_lines(path)) {
    words.insert(to_lower(line));
  }
  return words;
}

LexiconScorer::LexiconScorer(Lexicon lexicon,
                             std::unordered_set<std::string> common_words)
    : lexicon_(std::move(lexicon)), common_words_(std::move(common_words)) {}

ToxicityScore LexiconScorer::score(const std::string& text) const {
  const Phrase phrase = tokenize(text);
  double miss_product = 1.0;
  bool unknown_seen = false;
  for (const Token& token : phrase.tokens) {
    if (!token.is_word()) continue;
    const std::string lowered = to_lower(token.text);
    const auto it = lexicon_.entries.find(lowered);
    if (it != lexicon_.entries.end()) {
      miss_product *= 1.0 - it->second;
    }
    if (!unknown_seen && lexicon_.unknown_prior > 0.0 &&
        codepoint_length(token.text) >= 3 && is_alphabetic_word(token.text) &&
        common_words_.find(lowered) == common_words_.end()) {
      unknown_seen = true;
    }
  }
  const double match_score = 1.0 - miss_product;
  const double prior_hit = unknown_seen ? lexicon_.unknown_prior : 0.0;
  return clamp01(std::max(match_score, prior_hit));
}

}  // namespace toxkit
