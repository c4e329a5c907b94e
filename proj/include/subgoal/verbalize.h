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

#ifndef SUBGOAL_VERBALIZE_H_
#define SUBGOAL_VERBALIZE_H_

#include <string>
#include <string_view>
#include <vector>

#include "subgoal/model.h"

namespace subgoal {

// Text forms of belief states and dialog acts as the generator sees them.
//
//   state:  "train departure: london liverpool street; destination: cambridge;"
//   acts:   "booking hotel inform NAME; inform PRICE;"
//   target: "[A] booking hotel inform NAME; inform PRICE; [R] [hotel_name] is ..."
//
// The domain prefix is written once and stays in effect for the following
// clauses until another domain appears. Slot names of acts are written in
// uppercase. Parsers are lenient: malformed clauses are skipped and
// reported in `diagnostics`, they never throw.

std::string VerbalizeState(const BeliefState &state);

struct StateParse {
  BeliefState state;
  std::vector<std::string> diagnostics;
};

// Accepts an optional leading "[B]" token.
StateParse ParseState(std::string_view text);

std::string VerbalizeActs(const std::vector<DialogAct> &acts);

std::vector<DialogAct> ParseActs(std::string_view text,
                                 std::vector<std::string> *diagnostics);

struct ActResponseParse {
  std::vector<DialogAct> acts;
  std::string response;
  std::vector<std::string> diagnostics;
};

// Expects "[A] <acts> [R] <response>". Without both tokens the whole text
// becomes the response and the acts stay empty.
ActResponseParse ParseActResponse(std::string_view text);

// Generation targets, as emitted into training files.
std::string StateTarget(const BeliefState &state);
std::string ActResponseTarget(const std::vector<DialogAct> &acts,
                              std::string_view response);

}  // namespace subgoal

#endif  // SUBGOAL_VERBALIZE_H_
