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

#include "toxkit/edit_distance.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "toxkit/text.hpp"

namespace toxkit {

namespace {

// Lowrance-Wagner dynamic program over codepoints. Row 0 / column 0 hold the
// "match against empty prefix" sentinel required by the transposition rule.
std::size_t dl_distance(const std::vector<char32_t>& a,
                        const std::vector<char32_t>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0) return m;
  if (m == 0) return n;

  const std::size_t inf = n + m;
  std::vector<std::vector<std::size_t>> d(n + 2,
                                          std::vector<std::size_t>(m + 2));
  d[0][0] = inf;
  for (std::size_t i = 0; i <= n; ++i) {
    d[i + 1][0] = inf;
    d[i + 1][1] = i;
  }
  for (std::size_t j = 0; j <= m; ++j) {
    d[0][j + 1] = inf;
    d[1][j + 1] = j;
  }

  std::unordered_map<char32_t, std::size_t> last_row;
  for (char32_t cp : a) last_row.emplace(cp, 0);
  for (char32_t cp : b) last_row.emplace(cp, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t last_match_col = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t i1 = last_row[b[j - 1]];
      const std::size_t j1 = last_match_col;
      std::size_t cost = 1;
      if (a[i - 1] == b[j - 1]) {
        cost = 0;
        last_match_col = j;
      }
      d[i + 1][j + 1] = std::min(
          {d[i][j] + cost,                                      // substitute
           d[i + 1][j] + 1,                                     // insert
           d[i][j + 1] + 1,                                     // delete
           d[i1][j1] + (i - i1 - 1) + 1 + (j - j1 - 1)});       // transpose
    }
    last_row[a[i - 1]] = i;
  }
  return d[n + 1][m + 1];
}

}  // namespace

std::size_t damerau_levenshtein(std::string_view a, std::string_view b) {
  return dl_distance(decode_utf8(a), decode_utf8(b));
}

std::size_t damerau_levenshtein_capped(std::string_view a, std::string_view b,
                                       std::size_t cap) {
  // Byte-length difference is a lower bound on codepoint-length difference
  // only for pure ASCII, so decode before pruning.
  const auto ca = decode_utf8(a);
  const auto cb = decode_utf8(b);
  const std::size_t diff =
      ca.size() > cb.size() ? ca.size() - cb.size() : cb.size() - ca.size();
  if (diff > cap) return cap + 1;
  return dl_distance(ca, cb);
}

}  // namespace toxkit
