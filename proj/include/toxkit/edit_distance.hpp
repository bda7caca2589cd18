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

#ifndef TOXKIT_EDIT_DISTANCE_HPP
#define TOXKIT_EDIT_DISTANCE_HPP

#include <cstddef>
#include <string_view>

namespace toxkit {

/// Damerau-Levenshtein distance (insertions, deletions, substitutions, and
/// transpositions of adjacent characters; the unrestricted Lowrance-Wagner
/// form). Operates on codepoints, not bytes.
std::size_t damerau_levenshtein(std::string_view a, std::string_view b);

/// Same metric, but may return any value > cap once the true distance
/// exceeds `cap`. Cheap length-difference rejection first.
std::size_t damerau_levenshtein_capped(std::string_view a, std::string_view b,
                                       std::size_t cap);

}  // namespace toxkit

#endif  // TOXKIT_EDIT_DISTANCE_HPP
