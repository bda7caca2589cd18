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

#include "toxkit/perturb.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace toxkit {

namespace {

std::vector<char32_t> decode_alphabetic(std::string_view word,
                                        std::string_view op_name) {
  if (!is_alphabetic_word(word)) {
    throw std::invalid_argument(std::string(op_name) +
                                ": word must be alphabetic: \"" +
                                std::string(word) + "\"");
  }
  return decode_utf8(word);
}

[[noreturn]] void throw_pos(std::string_view op_name, std::size_t pos) {
  throw std::out_of_range(std::string(op_name) + ": position " +
                          std::to_string(pos) + " out of range");
}

}  // namespace

std::string_view to_string(PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::DotInsert:
      return "dot_insert";
    case PerturbationKind::SpaceOut:
      return "space_out";
    case PerturbationKind::DuplicateLetter:
      return "duplicate_letter";
    case PerturbationKind::SwapAdjacent:
      return "swap_adjacent";
  }
  return "unknown";
}

PerturbationKind perturbation_kind_from_string(std::string_view name) {
  if (name == "dot_insert") return PerturbationKind::DotInsert;
  if (name == "space_out") return PerturbationKind::SpaceOut;
  if (name == "duplicate_letter") return PerturbationKind::DuplicateLetter;
  if (name == "swap_adjacent") return PerturbationKind::SwapAdjacent;
  throw std::invalid_argument("unknown perturbation kind: " +
                              std::string(name));
}

std::string dot_insert(std::string_view word, std::size_t pos) {
  const auto cps = decode_alphabetic(word, "dot_insert");
  if (pos < 1 || pos > cps.size() - 1) throw_pos("dot_insert", pos);
  std::vector<char32_t> out(cps.begin(), cps.begin() + pos);
  out.push_back(U'.');
  out.insert(out.end(), cps.begin() + pos, cps.end());
  return encode_utf8(out);
}

std::string space_out(std::string_view word) {
  const auto cps = decode_alphabetic(word, "space_out");
  std::vector<char32_t> out;
  out.reserve(cps.size() * 2);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (i > 0) out.push_back(U' ');
    out.push_back(cps[i]);
  }
  return encode_utf8(out);
}

std::string duplicate_letter(std::string_view word, std::size_t pos) {
  auto cps = decode_utf8(word);
  if (cps.empty() || pos > cps.size() - 1) throw_pos("duplicate_letter", pos);
  cps.insert(cps.begin() + pos, cps[pos]);
  return encode_utf8(cps);
}

std::string swap_adjacent(std::string_view word, std::size_t pos) {
  auto cps = decode_utf8(word);
  if (cps.size() < 2 || pos > cps.size() - 2) throw_pos("swap_adjacent", pos);
  if (cps[pos] == cps[pos + 1]) {
    throw std::invalid_argument("swap_adjacent: equal characters at position " +
                                std::to_string(pos) + " would be a no-op");
  }
  std::swap(cps[pos], cps[pos + 1]);
  return encode_utf8(cps);
}

std::string apply_perturbation(const PerturbationOp& op,
                               std::string_view word) {
  switch (op.kind) {
    case PerturbationKind::DotInsert:
      return dot_insert(word, op.pos);
    case PerturbationKind::SpaceOut:
      return space_out(word);
    case PerturbationKind::DuplicateLetter:
      return duplicate_letter(word, op.pos);
    case PerturbationKind::SwapAdjacent:
      return swap_adjacent(word, op.pos);
  }
  throw std::invalid_argument("unknown perturbation kind");
}

std::vector<std::pair<PerturbationOp, std::string>> enumerate_perturbations(
    std::string_view word) {
  const auto cps = decode_alphabetic(word, "enumerate_perturbations");
  std::vector<std::pair<PerturbationOp, std::string>> out;
  if (cps.size() < 2) return out;

  std::unordered_set<std::string> seen;
  seen.emplace(word);
  auto push = [&](PerturbationOp op, std::string result) {
    if (seen.insert(result).second) out.emplace_back(op, std::move(result));
  };

  const std::size_t len = cps.size();
  for (std::size_t pos = 1; pos <= len - 1; ++pos) {
    push({PerturbationKind::DotInsert, pos}, dot_insert(word, pos));
  }
  push({PerturbationKind::SpaceOut, 0}, space_out(word));
  for (std::size_t pos = 0; pos <= len - 1; ++pos) {
    push({PerturbationKind::DuplicateLetter, pos},
         duplicate_letter(word, pos));
  }
  for (std::size_t pos = 0; pos + 1 <= len - 1; ++pos) {
    if (cps[pos] == cps[pos + 1]) continue;
    push({PerturbationKind::SwapAdjacent, pos}, swap_adjacent(word, pos));
  }
  return out;
}

Phrase insert_negation(const Phrase& phrase, std::size_t word_index) {
  const Token& target = phrase.word(word_index);
  std::string next = phrase.source.substr(0, target.begin);
  next += "not ";
  next += phrase.source.substr(target.begin);
  return tokenize(next);
}

}  // namespace toxkit
