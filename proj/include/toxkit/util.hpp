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

#ifndef TOXKIT_UTIL_HPP
#define TOXKIT_UTIL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace toxkit {

/// Whole-file read; throws std::runtime_error when the file cannot be opened.
std::string read_file(const std::string& path);

/// Atomic-ish whole-file write (direct, no temp file); throws on failure.
void write_file(const std::string& path, std::string_view content);

/// Splits on '\n', dropping a trailing '\r' per line. The final empty line
/// after a trailing newline is not included.
std::vector<std::string> split_lines(std::string_view content);

/// Lines of a fixture file with '#' comment lines and blank lines removed,
/// whitespace-trimmed.
std::vector<std::string> read_data_lines(const std::string& path);

std::string_view trim(std::string_view s);

/// FNV-1a 64-bit over raw bytes; the feature-hashing primitive and the
/// report/dictionary state hash.
std::uint64_t fnv1a64(std::string_view bytes);

/// Seeded Fisher-Yates with an explicit modulo draw so shuffles are
/// bit-identical across standard library implementations.
void seeded_shuffle_indices(std::vector<std::size_t>& indices,
                            std::uint64_t seed);

}  // namespace toxkit

#endif  // TOXKIT_UTIL_HPP
