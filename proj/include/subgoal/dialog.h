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

#ifndef SUBGOAL_DIALOG_H_
#define SUBGOAL_DIALOG_H_

#include <vector>

#include "subgoal/model.h"

namespace subgoal {

// One context per turn; context t holds the first t turns as history and
// the user utterance of turn t.
std::vector<DialogContext> ContextsOf(const Dialog &dialog);

DialogContext ContextAt(const Dialog &dialog, size_t turn);

// Copy of `dialog` with one fragment of turn `turn` taken from `source`:
// the belief state for kState, acts and response together for
// kActResponse. Throws IndexError if `turn` is out of range.
Dialog ReplaceTurn(const Dialog &dialog, size_t turn, SubgoalKind kind,
                   const SystemTurn &source);

// Whether `a` and `b` agree on the fragment selected by `kind`.
bool SameFragment(const SystemTurn &a, const SystemTurn &b, SubgoalKind kind);

}  // namespace subgoal

#endif  // SUBGOAL_DIALOG_H_
