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

#ifndef TOXKIT_TEXT_HPP
#define TOXKIT_TEXT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace toxkit {

enum class TokenKind { Word, Separator };

/// A maximal run of word characters (letters plus word-internal apostrophes)
/// or of everything else. `begin`/`end` are byte offsets into the source
/// string; concatenating token texts in order reproduces the source exactly.
struct Token {
  TokenKind kind;
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;  // one past the last byte

  bool is_word() const { return kind == TokenKind::Word; }
};

/// A source string together with its token partition.
struct Phrase {
  std::string source;
  std::vector<Token> tokens;

  std::size_t word_count() const;
  /// Index into `tokens` of the i-th Word token. Throws std::out_of_range.
  std::size_t word_token_index(std::size_t word_index) const;
  const Token& word(std::size_t word_index) const;
};

/// Splits `text` into alternating Word/Separator tokens. Word characters are
/// Unicode letters; an ASCII or typographic apostrophe counts as a word
/// character only between two letters ("They're" stays one word, a quote
/// does not get swallowed). Invalid UTF-8 bytes are treated as separator
/// bytes, so the partition always round-trips byte-exactly.
Phrase tokenize(std::string_view text);

/// Inverse of tokenize: concatenates token texts.
std::string detokenize(const Phrase& phrase);

/// Replaces the word_index-th Word token (0-based over Word tokens only)
/// with `replacement` and re-tokenizes. Throws std::out_of_range.
Phrase replace_word(const Phrase& phrase, std::size_t word_index,
                    std::string_view replacement);

// -- codepoint utilities shared by the perturbation and scoring code --

/// True when `cp` is in Unicode general category L*.
bool is_letter(char32_t cp);

/// Decodes UTF-8; invalid bytes come back as one replacement (0xFFFD) each.
std::vector<char32_t> decode_utf8(std::string_view text);

std::string encode_utf8(const std::vector<char32_t>& cps);
void append_utf8(std::string& out, char32_t cp);

/// True when every codepoint of `word` is a letter (no apostrophes, digits,
/// or invalid bytes). Empty input is not alphabetic.
bool is_alphabetic_word(std::string_view word);

/// Number of codepoints (not bytes).
std::size_t codepoint_length(std::string_view text);

/// ASCII-only case fold; multibyte sequences pass through untouched. The
/// scorers match case-insensitively through this.
std::string to_lower(std::string_view text);

}  // namespace toxkit

#endif  // TOXKIT_TEXT_HPP
