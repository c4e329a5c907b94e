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

#ifndef SUBGOAL_PROMPT_H_
#define SUBGOAL_PROMPT_H_

#include <string>
#include <string_view>

#include "subgoal/model.h"

namespace subgoal {

// Segment tokens of the two-stage prompt format.
inline constexpr std::string_view kContextToken = "[C]";
inline constexpr std::string_view kUserToken = "[U]";
inline constexpr std::string_view kSystemToken = "[R]";
inline constexpr std::string_view kBeliefToken = "[B]";
inline constexpr std::string_view kActsToken = "[A]";

using Stage = SubgoalKind;

struct Prompt {
  std::string text;
  Stage stage = Stage::kState;
};

// "[C] [U] <u0> [R] <r0> ... [U] <ut>". Utterances and responses are
// lowercased and trimmed; prior belief states and acts are not included.
Prompt SerializeStatePrompt(const DialogContext &context);

// The state prompt followed by "[B] <verbalized state>".
Prompt SerializeActPrompt(const DialogContext &context,
                          const BeliefState &state);

// Inverse of the segment layout: the state-prompt prefix of any prompt
// (everything before " [B]").
std::string_view StatePromptPrefix(std::string_view prompt);

}  // namespace subgoal

#endif  // SUBGOAL_PROMPT_H_
