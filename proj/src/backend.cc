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

#include "subgoal/backend.h"

namespace subgoal {

const char *BackendErrorKindName(BackendError::Kind kind) {
  switch (kind) {
    case BackendError::Kind::kNetwork:
      return "network";
    case BackendError::Kind::kHttp:
      return "http";
    case BackendError::Kind::kSchema:
      return "schema";
    case BackendError::Kind::kUnknownPrompt:
      return "unknown-prompt";
  }
  return "unknown";
}

BackendError::BackendError(Kind kind, std::string prompt_id, int retries,
                           const std::string &message)
    : Error(std::string("backend error (") + BackendErrorKindName(kind) +
            ", prompt " + prompt_id + ", " + std::to_string(retries) +
            " retries): " + message),
      kind_(kind),
      prompt_id_(std::move(prompt_id)),
      retries_(retries) {}

}  // namespace subgoal
