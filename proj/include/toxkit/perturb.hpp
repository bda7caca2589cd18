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

#ifndef TOXKIT_PERTURB_HPP
#define TOXKIT_PERTURB_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "toxkit/text.hpp"

namespace toxkit {

/// The four character-level edits an attacker applies to a single word.
enum class PerturbationKind {
  DotInsert,        // "stupid" -> "st.upid"
  SpaceOut,         // "Screw"  -> "S c r e w"
  DuplicateLetter,  // "idiot"  -> "idiiot"
  SwapAdjacent,     // "stupid" -> "stuipd"
};

std::string_view to_string(PerturbationKind kind);
PerturbationKind perturbation_kind_from_string(std::string_view name);

/// An edit plus its codepoint position within the word. `pos` is unused for
/// SpaceOut (stored as 0).
struct PerturbationOp {
  PerturbationKind kind;
  std::size_t pos = 0;

  bool operator==(const PerturbationOp&) const = default;
};

/// Applies `op` to `word`. Throws like the per-operator functions below.
std::string apply_perturbation(const PerturbationOp& op, std::string_view word);

/// Inserts '.' before the codepoint at `pos`; 1 <= pos <= len-1. Throws
/// std::invalid_argument on non-alphabetic words, std::out_of_range on bad
/// positions.
std::string dot_insert(std::string_view word, std::size_t pos);

/// Joins the word's letters with single ASCII spaces.
std::string space_out(std::string_view word);

/// Doubles the codepoint at `pos`; 0 <= pos <= len-1.
std::string duplicate_letter(std::string_view word, std::size_t pos);

/// Exchanges codepoints at `pos` and `pos+1`; rejects equal-character swaps
/// (they would be identity transforms).
std::string swap_adjacent(std::string_view word, std::size_t pos);

/// Every valid (op, result) pair for `word`, deduplicated by result string,
/// in deterministic order: DotInsert positions ascending, then SpaceOut, then
/// DuplicateLetter ascending, then SwapAdjacent ascending. The input word is
/// never in the list. Words shorter than two codepoints yield an empty list;
/// non-alphabetic words throw std::invalid_argument.
std::vector<std::pair<PerturbationOp, std::string>> enumerate_perturbations(
    std::string_view word);

/// Inserts a Word token "not" plus a space immediately before the
/// word_index-th word. Throws std::out_of_range.
Phrase insert_negation(const Phrase& phrase, std::size_t word_index);

}  // namespace toxkit

#endif  // TOXKIT_PERTURB_HPP
