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

#include "toxkit/remote.hpp"

#include <cstdlib>
#include <thread>
#include <utility>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "toxkit/util.hpp"

namespace toxkit {

namespace {

using nlohmann::json;

std::string json_escape(const std::string& text) {
  // Serialize as a JSON string, then strip the surrounding quotes so the
  // template's own quotes stay in control.
  const std::string quoted = json(text).dump();
  return quoted.substr(1, quoted.size() - 2);
}

std::string replace_all(std::string haystack, const std::string& needle,
                        const std::string& value) {
  std::size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    haystack.replace(pos, needle.size(), value);
    pos += value.size();
  }
  return haystack;
}

// scheme://host[:port]  +  /path?query
struct SplitUrl {
  std::string origin;
  std::string path;
};

SplitUrl split_url(const std::string& url) {
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw std::invalid_argument("endpoint url must include a scheme: " + url);
  }
  const std::size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

void EndpointConfig::validate() const {
  if (url.empty()) throw std::invalid_argument("endpoint: url is required");
  if (template_body.find("{{text}}") == std::string::npos) {
    throw std::invalid_argument("endpoint: template must contain {{text}}");
  }
  if (score_path.empty()) {
    throw std::invalid_argument("endpoint: score_path is required");
  }
  if (max_rps < 0.0) throw std::invalid_argument("endpoint: max_rps < 0");
  if (timeout_s <= 0.0) throw std::invalid_argument("endpoint: timeout <= 0");
}

EndpointConfig load_endpoint_config(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  EndpointConfig config;
  config.url = doc.at("url").get<std::string>();
  config.template_body = doc.at("template").get<std::string>();
  config.score_path = doc.at("score_path").get<std::string>();
  config.api_key_env = doc.value("api_key_env", std::string());
  config.max_rps = doc.value("max_rps", 1.0);
  config.timeout_s = doc.value("timeout_s", 10.0);
  config.validate();
  return config;
}

std::string build_request_body(const std::string& template_body,
                               const std::string& text) {
  return replace_all(template_body, "{{text}}", json_escape(text));
}

ToxicityScore extract_score(const std::string& body,
                            const std::string& score_path) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw RemoteError(std::string("unparseable response body: ") + e.what(),
                      false);
  }
  const json* node = &doc;
  std::size_t start = 0;
  while (start <= score_path.size()) {
    const std::size_t dot = score_path.find('.', start);
    const std::string key =
        score_path.substr(start, dot == std::string::npos ? std::string::npos
                                                          : dot - start);
    if (!node->is_object() || !node->contains(key)) {
      throw RemoteError("response is missing score field \"" + score_path +
                            "\" (stopped at \"" + key + "\")",
                        false);
    }
    node = &(*node)[key];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (!node->is_number()) {
    throw RemoteError("score field \"" + score_path + "\" is not numeric",
                      false);
  }
  return clamp01(node->get<double>());
}

RemoteScorer::RemoteScorer(EndpointConfig config)
    : config_(std::move(config)), next_allowed_(std::chrono::steady_clock::now()) {
  config_.validate();
  resolved_url_ = config_.url;
  if (resolved_url_.find("{{key}}") != std::string::npos) {
    if (config_.api_key_env.empty()) {
      throw std::invalid_argument(
          "endpoint url references {{key}} but api_key_env is not set");
    }
    const char* key = std::getenv(config_.api_key_env.c_str());
    if (key == nullptr || *key == '\0') {
      throw std::invalid_argument("environment variable " +
                                  config_.api_key_env + " is not set");
    }
    resolved_url_ = replace_all(resolved_url_, "{{key}}", key);
  }
}

ToxicityScore RemoteScorer::score(const std::string& text) const {
  if (config_.max_rps > 0.0) {
    const auto interval = std::chrono::duration_cast<
        std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(1.0 / config_.max_rps));
    std::chrono::steady_clock::time_point wake;
    {
      std::lock_guard<std::mutex> lock(rate_mutex_);
      const auto now = std::chrono::steady_clock::now();
      wake = std::max(now, next_allowed_);
      next_allowed_ = wake + interval;
    }
    std::this_thread::sleep_until(wake);
  }

  const SplitUrl target = split_url(resolved_url_);
  httplib::Client client(target.origin);
  client.set_connection_timeout(std::chrono::duration_cast<
      std::chrono::milliseconds>(std::chrono::duration<double>(config_.timeout_s)));
  client.set_read_timeout(std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::duration<double>(config_.timeout_s)));

  const std::string body = build_request_body(config_.template_body, text);
  const httplib::Result res = client.Post(target.path, body, "application/json");
  if (!res) {
    throw RemoteError("transport failure: " + httplib::to_string(res.error()),
                      true);
  }
  if (res->status < 200 || res->status >= 300) {
    const bool retryable = res->status == 429 || res->status >= 500;
    throw RemoteError("endpoint returned HTTP " + std::to_string(res->status),
                      retryable);
  }
  return extract_score(res->body, config_.score_path);
}

}  // namespace toxkit
