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

#include "subgoal/prompt.h"

#include "subgoal/text.h"
#include "subgoal/verbalize.h"

namespace subgoal {

namespace {

void AppendSegment(std::string *out, std::string_view token,
                   std::string_view text) {
  *out += ' ';
  *out += token;
  std::string cleaned = ToLower(Trim(text));
  if (!cleaned.empty()) {
    *out += ' ';
    *out += cleaned;
  }
}

}  // namespace

Prompt SerializeStatePrompt(const DialogContext &context) {
  Prompt prompt;
  prompt.stage = Stage::kState;
  prompt.text = std::string(kContextToken);
  for (const auto &turn : context.history) {
    AppendSegment(&prompt.text, kUserToken, turn.user);
    AppendSegment(&prompt.text, kSystemToken, turn.system.response);
  }
  AppendSegment(&prompt.text, kUserToken, context.user);
  return prompt;
}

Prompt SerializeActPrompt(const DialogContext &context,
                          const BeliefState &state) {
  Prompt prompt = SerializeStatePrompt(context);
  prompt.stage = Stage::kActResponse;
  prompt.text += ' ';
  prompt.text += kBeliefToken;
  std::string verbalized = VerbalizeState(state);
  if (!verbalized.empty()) {
    prompt.text += ' ';
    prompt.text += verbalized;
  }
  return prompt;
}

std::string_view StatePromptPrefix(std::string_view prompt) {
  // Context text is lowercased, so the first uppercase [B] is the segment
  // token.
  size_t pos = prompt.find(" [B]");
  return pos == std::string_view::npos ? prompt : prompt.substr(0, pos);
}

}  // namespace subgoal
