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

#ifndef SUBGOAL_HTTP_BACKEND_H_
#define SUBGOAL_HTTP_BACKEND_H_

#include <chrono>
#include <semaphore>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subgoal/backend.h"

namespace subgoal {

struct HttpBackendOptions {
  // Full URL of the completion endpoint, e.g. http://localhost:8000/generate.
  std::string endpoint;
  int max_retries = 3;
  std::chrono::milliseconds initial_backoff{200};
  std::chrono::milliseconds max_backoff{5000};
  int max_in_flight = 4;
  std::chrono::seconds timeout{120};
};

// Completion client for a remote model server.
//
// Request:  POST {"prompt": str, "n": int, "greedy": bool,
//                 "temperature": float, "seed": int, "max_tokens": int}
// Response: {"completions": [str, ...]} with exactly n entries.
//
// Transport failures, 408, 429 and 5xx replies are retried with exponential
// backoff; other HTTP errors and malformed replies fail immediately. At most
// `max_in_flight` requests are outstanding across all threads.
class HttpBackend : public GeneratorBackend {
 public:
  // Throws ValidationError for URLs that are not http://host[:port][/path].
  explicit HttpBackend(HttpBackendOptions options);

  std::vector<std::string> Generate(const GenerationRequest &request) override;

  const std::string &host_url() const { return host_url_; }
  const std::string &path() const { return path_; }

 private:
  HttpBackendOptions options_;
  std::string host_url_;
  std::string path_;
  std::counting_semaphore<1024> in_flight_;
};

nlohmann::json RequestToJson(const GenerationRequest &request);

// Extracts the completions of a reply body. Throws BackendError (schema)
// for malformed bodies or a completion count different from `n`.
std::vector<std::string> ParseCompletions(const std::string &body, int n,
                                          const std::string &prompt_id,
                                          int retries);

}  // namespace subgoal

#endif  // SUBGOAL_HTTP_BACKEND_H_
