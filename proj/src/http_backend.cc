// Copyright 2026 The Subgoal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subgoal/http_backend.h"

#include <algorithm>
#include <thread>

#include <httplib.h>

#include "subgoal/errors.h"
#include "subgoal/text.h"

namespace subgoal {

namespace {

bool Retryable(int status) {
  return status == 408 || status == 429 || status >= 500;
}

}  // namespace

nlohmann::json RequestToJson(const GenerationRequest &request) {
  return {{"prompt", request.prompt},       {"n", request.n},
          {"greedy", request.greedy},       {"temperature", request.temperature},
          {"seed", request.seed},           {"max_tokens", request.max_tokens}};
}

std::vector<std::string> ParseCompletions(const std::string &body, int n,
                                          const std::string &prompt_id,
                                          int retries) {
  nlohmann::json reply = nlohmann::json::parse(body, nullptr, false);
  if (reply.is_discarded()) {
    throw BackendError(BackendError::Kind::kSchema, prompt_id, retries,
                       "reply is not JSON");
  }
  if (!reply.is_object() || !reply.contains("completions") ||
      !reply["completions"].is_array()) {
    throw BackendError(BackendError::Kind::kSchema, prompt_id, retries,
                       "reply lacks a 'completions' array");
  }
  std::vector<std::string> out;
  for (const auto &c : reply["completions"]) {
    if (!c.is_string()) {
      throw BackendError(BackendError::Kind::kSchema, prompt_id, retries,
                         "non-string completion");
    }
    out.push_back(c.get<std::string>());
  }
  if (out.size() != static_cast<size_t>(n)) {
    throw BackendError(BackendError::Kind::kSchema, prompt_id, retries,
                       "expected " + std::to_string(n) + " completions, got " +
                           std::to_string(out.size()));
  }
  return out;
}

HttpBackend::HttpBackend(HttpBackendOptions options)
    : options_(std::move(options)),
      in_flight_(std::clamp(options_.max_in_flight, 1, 1024)) {
  const std::string &url = options_.endpoint;
  constexpr std::string_view kScheme = "http://";
  if (!StartsWith(url, kScheme) || url.size() == kScheme.size()) {
    throw ValidationError("backend endpoint must be an http:// URL: " + url);
  }
  size_t slash = url.find('/', kScheme.size());
  host_url_ = url.substr(0, slash);
  path_ = slash == std::string::npos ? "/" : url.substr(slash);
  std::string authority = host_url_.substr(kScheme.size());
  if (authority.empty() || authority.find_first_of(" \t") != std::string::npos) {
    throw ValidationError("malformed backend endpoint: " + url);
  }
}

std::vector<std::string> HttpBackend::Generate(const GenerationRequest &request) {
  const std::string body = RequestToJson(request).dump();
  std::string last_error;
  BackendError::Kind last_kind = BackendError::Kind::kNetwork;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    if (attempt > 0) {
      auto delay = options_.initial_backoff * (1LL << std::min(attempt - 1, 20));
      std::this_thread::sleep_for(std::min<std::chrono::milliseconds>(
          delay, options_.max_backoff));
    }
    in_flight_.acquire();
    httplib::Result result;
    {
      httplib::Client client(host_url_);
      client.set_connection_timeout(options_.timeout);
      client.set_read_timeout(options_.timeout);
      client.set_write_timeout(options_.timeout);
      result = client.Post(path_, body, "application/json");
    }
    in_flight_.release();

    if (!result) {
      last_kind = BackendError::Kind::kNetwork;
      last_error = httplib::to_string(result.error());
      continue;
    }
    if (result->status == 200) {
      return ParseCompletions(result->body, request.n, request.prompt_id, attempt);
    }
    last_kind = BackendError::Kind::kHttp;
    last_error = "HTTP status " + std::to_string(result->status);
    if (!Retryable(result->status)) {
      throw BackendError(last_kind, request.prompt_id, attempt, last_error);
    }
  }
  throw BackendError(last_kind, request.prompt_id, options_.max_retries,
                     last_error);
}

}  // namespace subgoal
