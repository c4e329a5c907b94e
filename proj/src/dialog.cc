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

#include "subgoal/dialog.h"

#include <string>

#include "subgoal/errors.h"

namespace subgoal {

DialogContext ContextAt(const Dialog &dialog, size_t turn) {
  if (turn >= dialog.turns.size()) {
    throw IndexError("turn " + std::to_string(turn) + " out of range for " +
                     dialog.id + " (" + std::to_string(dialog.turns.size()) +
                     " turns)");
  }
  DialogContext context;
  context.goal_id = dialog.goal_id;
  context.dialog_id = dialog.id;
  context.turn = turn;
  context.history.assign(dialog.turns.begin(), dialog.turns.begin() + turn);
  context.user = dialog.turns[turn].user;
  return context;
}

std::vector<DialogContext> ContextsOf(const Dialog &dialog) {
  std::vector<DialogContext> out;
  out.reserve(dialog.turns.size());
  for (size_t t = 0; t < dialog.turns.size(); ++t) {
    out.push_back(ContextAt(dialog, t));
  }
  return out;
}

Dialog ReplaceTurn(const Dialog &dialog, size_t turn, SubgoalKind kind,
                   const SystemTurn &source) {
  if (turn >= dialog.turns.size()) {
    throw IndexError("replacement turn " + std::to_string(turn) +
                     " out of range for " + dialog.id);
  }
  Dialog out = dialog;
  SystemTurn &target = out.turns[turn].system;
  if (kind == SubgoalKind::kState) {
    target.state = source.state;
  } else {
    target.acts = source.acts;
    target.response = source.response;
  }
  return out;
}

bool SameFragment(const SystemTurn &a, const SystemTurn &b, SubgoalKind kind) {
  if (kind == SubgoalKind::kState) return a.state == b.state;
  return a.acts == b.acts && a.response == b.response;
}

}  // namespace subgoal
