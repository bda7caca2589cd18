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

#include "toxkit/text.hpp"

#include <algorithm>
#include <stdexcept>

namespace toxkit {

namespace {

struct LetterRange {
  char32_t lo;
  char32_t hi;
};

const LetterRange kLetterRanges[] = {
#include "unicode_letter_ranges.inc"
};

constexpr char32_t kReplacement = 0xFFFD;
constexpr char32_t kApostrophe = 0x27;
constexpr char32_t kRightSingleQuote = 0x2019;

bool is_apostrophe(char32_t cp) {
  return cp == kApostrophe || cp == kRightSingleQuote;
}

// One decoded codepoint plus the byte span it came from.
struct DecodedChar {
  char32_t cp;
  std::size_t begin;
  std::size_t end;
};

// Strict UTF-8 decoder; each invalid byte yields one replacement char so the
// byte partition of the source is never lost.
std::vector<DecodedChar> decode_spans(std::string_view text) {
  std::vector<DecodedChar> out;
  out.reserve(text.size());
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    }
    bool ok = len > 0 && i + len <= n;
    if (ok) {
      for (std::size_t k = 1; k < len; ++k) {
        const auto bk = static_cast<unsigned char>(text[i + k]);
        if ((bk & 0xC0) != 0x80) {
          ok = false;
          break;
        }
        cp = (cp << 6) | (bk & 0x3F);
      }
    }
    if (ok) {
      // Reject overlong encodings, surrogates, and out-of-range values.
      static const char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
      if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        ok = false;
      }
    }
    if (!ok) {
      out.push_back({kReplacement, i, i + 1});
      ++i;
    } else {
      out.push_back({cp, i, i + len});
      i += len;
    }
  }
  return out;
}

}  // namespace

bool is_letter(char32_t cp) {
  const auto* first = std::begin(kLetterRanges);
  const auto* last = std::end(kLetterRanges);
  const auto* it = std::upper_bound(
      first, last, cp,
      [](char32_t value, const LetterRange& r) { return value < r.lo; });
  if (it == first) return false;
  --it;
  return cp >= it->lo && cp <= it->hi;
}

std::vector<char32_t> decode_utf8(std::string_view text) {
  std::vector<char32_t> out;
  for (const auto& d : decode_spans(text)) out.push_back(d.cp);
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

bool is_alphabetic_word(std::string_view word) {
  if (word.empty()) return false;
  for (char32_t cp : decode_utf8(word)) {
    if (!is_letter(cp)) return false;
  }
  return true;
}

std::size_t codepoint_length(std::string_view text) {
  return decode_utf8(text).size();
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

Phrase tokenize(std::string_view text) {
  Phrase phrase;
  phrase.source.assign(text);
  const auto chars = decode_spans(text);
  const std::size_t n = chars.size();

  // Classify each codepoint as word-char or separator-char. Apostrophes are
  // word-internal only between two letters.
  std::vector<bool> word_char(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_letter(chars[i].cp)) {
      word_char[i] = true;
    } else if (is_apostrophe(chars[i].cp) && i > 0 && i + 1 < n &&
               is_letter(chars[i - 1].cp) && is_letter(chars[i + 1].cp)) {
      word_char[i] = true;
    }
  }

  std::size_t i = 0;
  while (i < n) {
    const bool in_word = word_char[i];
    std::size_t j = i;
    while (j < n && word_char[j] == in_word) ++j;
    Token tok;
    tok.kind = in_word ? TokenKind::Word : TokenKind::Separator;
    tok.begin = chars[i].begin;
    tok.end = chars[j - 1].end;
    tok.text = phrase.source.substr(tok.begin, tok.end - tok.begin);
    phrase.tokens.push_back(std::move(tok));
    i = j;
  }
  return phrase;
}

std::string detokenize(const Phrase& phrase) {
  std::string out;
  out.reserve(phrase.source.size());
  for (const Token& t : phrase.tokens) out += t.text;
  return out;
}

std::size_t Phrase::word_count() const {
  std::size_t count = 0;
  for (const Token& t : tokens) {
    if (t.is_word()) ++count;
  }
  return count;
}

std::size_t Phrase::word_token_index(std::size_t word_index) const {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].is_word()) {
      if (seen == word_index) return i;
      ++seen;
    }
  }
  throw std::out_of_range("word index " + std::to_string(word_index) +
                          " out of range (phrase has " + std::to_string(seen) +
                          " words)");
}

const Token& Phrase::word(std::size_t word_index) const {
  return tokens[word_token_index(word_index)];
}

Phrase replace_word(const Phrase& phrase, std::size_t word_index,
                    std::string_view replacement) {
  const Token& target = phrase.word(word_index);
  std::string next = phrase.source.substr(0, target.begin);
  next.append(replacement);
  next.append(phrase.source.substr(target.end));
  return tokenize(next);
}

}  // namespace toxkit
