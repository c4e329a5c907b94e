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

#ifndef SUBGOAL_BACKEND_H_
#define SUBGOAL_BACKEND_H_

#include <cstdint>
#include <string>
#include <vector>

#include "subgoal/errors.h"

namespace subgoal {

struct GenerationRequest {
  std::string prompt;
  // Diagnostic handle, "<dialog id>@<turn>". Not part of the wire format.
  std::string prompt_id;
  int n = 1;
  bool greedy = true;
  double temperature = 1.0;
  uint64_t seed = 0;
  int max_tokens = 256;
};

class BackendError : public Error {
 public:
  enum class Kind { kNetwork, kHttp, kSchema, kUnknownPrompt };

  BackendError(Kind kind, std::string prompt_id, int retries,
               const std::string &message);

  Kind kind() const { return kind_; }
  const std::string &prompt_id() const { return prompt_id_; }
  int retries() const { return retries_; }

 private:
  Kind kind_;
  std::string prompt_id_;
  int retries_;
};

const char *BackendErrorKindName(BackendError::Kind kind);

// Source of completions. Implementations must be safe for concurrent calls
// and return exactly `request.n` completions or throw BackendError. The same
// request (prompt, seed, parameters) should yield the same completions.
class GeneratorBackend {
 public:
  virtual ~GeneratorBackend() = default;
  virtual std::vector<std::string> Generate(const GenerationRequest &request) = 0;
};

}  // namespace subgoal

#endif  // SUBGOAL_BACKEND_H_
