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

#ifndef TOXKIT_REMOTE_HPP
#define TOXKIT_REMOTE_HPP

#include <chrono>
#include <mutex>
#include <stdexcept>
#include <string>

#include "toxkit/scorer.hpp"

namespace toxkit {

/// Wire description of a Perspective-like scoring endpoint. The request body
/// is `template_body` with `{{text}}` replaced by the JSON-escaped input;
/// `{{key}}` in the URL is replaced by the value of `api_key_env`.
struct EndpointConfig {
  std::string url;
  std::string template_body;
  std::string score_path;  // dot-separated path to the numeric score
  std::string api_key_env; // empty means no key required
  double max_rps = 1.0;    // 0 disables client-side rate limiting
  double timeout_s = 10.0;

  void validate() const;  // throws std::invalid_argument
};

EndpointConfig load_endpoint_config(const std::string& path);

/// Thrown on transport failures, non-2xx statuses, and unusable responses.
/// `retryable` is set for rate-limit (429) and 5xx responses.
class RemoteError : public std::runtime_error {
 public:
  RemoteError(const std::string& what, bool retryable)
      : std::runtime_error(what), retryable(retryable) {}
  bool retryable;
};

/// `template_body` with {{text}} substituted (JSON string escaping applied).
std::string build_request_body(const std::string& template_body,
                               const std::string& text);

/// Follows a dot-separated path into a JSON document and returns the number
/// found there, clamped to [0,1]. Throws RemoteError(missing score field).
ToxicityScore extract_score(const std::string& body,
                            const std::string& score_path);

/// HTTP client for live endpoints. One POST per score() call; a process-wide
/// (per-instance) rate limit is enforced across concurrent callers. Never
/// used by the offline test or acceptance suites.
class RemoteScorer : public Scorer {
 public:
  explicit RemoteScorer(EndpointConfig config);

  ToxicityScore score(const std::string& text) const override;

 private:
  std::string resolved_url_;
  EndpointConfig config_;
  mutable std::mutex rate_mutex_;
  mutable std::chrono::steady_clock::time_point next_allowed_;
};

}  // namespace toxkit

#endif  // TOXKIT_REMOTE_HPP
