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

#include "subgoal/detector.h"

#include "subgoal/dialog.h"
#include "subgoal/evaluator.h"

namespace subgoal {

std::vector<SubgoalSample> DetectSubgoals(const CandidateGroup &group,
                                          const Database &db) {
  std::vector<const Candidate *> failed;
  for (const auto &candidate : group.candidates) {
    if (!candidate.success) failed.push_back(&candidate);
  }
  std::vector<SubgoalSample> out;
  if (failed.empty()) return out;

  for (const auto &positive : group.candidates) {
    if (!positive.success) continue;
    const Dialog &dialog = positive.dialog;
    for (size_t t = 0; t < dialog.turns.size(); ++t) {
      const SystemTurn &original = dialog.turns[t].system;
      for (SubgoalKind kind : {SubgoalKind::kState, SubgoalKind::kActResponse}) {
        SubgoalSample sample;
        std::vector<SystemTurn> tried;
        for (const Candidate *negative : failed) {
          if (t >= negative->dialog.turns.size()) continue;
          const SystemTurn &fragment = negative->dialog.turns[t].system;
          if (SameFragment(original, fragment, kind)) continue;
          bool seen = false;
          for (const auto &prior : tried) {
            if (SameFragment(prior, fragment, kind)) {
              seen = true;
              break;
            }
          }
          if (seen) continue;
          tried.push_back(fragment);
          Dialog replaced = ReplaceTurn(dialog, t, kind, fragment);
          if (!DialogSuccess(replaced, group.goal, db)) {
            sample.negatives.push_back(fragment);
            sample.negative_dialog_ids.push_back(negative->id);
          }
        }
        if (sample.negatives.empty()) continue;
        sample.context = ContextAt(dialog, t);
        sample.kind = kind;
        sample.positive = original;
        sample.goal_id = group.goal_id;
        sample.dialog_id = positive.id;
        sample.turn = t;
        out.push_back(std::move(sample));
      }
    }
  }
  return out;
}

}  // namespace subgoal
