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

#ifndef SUBGOAL_DETECTOR_H_
#define SUBGOAL_DETECTOR_H_

#include <string>
#include <vector>

#include "subgoal/candidates.h"
#include "subgoal/database.h"
#include "subgoal/model.h"

namespace subgoal {

// A turn-level generation of a successful dialog whose replacement by a
// fragment of an unsuccessful dialog makes the dialog fail.
struct SubgoalSample {
  DialogContext context;
  SubgoalKind kind = SubgoalKind::kState;
  // Full system turn of the successful dialog; only the fragment selected
  // by `kind` is meaningful.
  SystemTurn positive;
  // Distinct flipping fragments, in discovery order.
  std::vector<SystemTurn> negatives;
  std::string goal_id;
  // Candidate the positive came from.
  std::string dialog_id;
  // Candidate each negative came from (first one that produced it).
  std::vector<std::string> negative_dialog_ids;
  size_t turn = 0;
};

// Replacement test over a labeled group. For every successful candidate
// (in group order), every turn and both kinds, the fragments of the
// unsuccessful candidates at the same turn are substituted one at a time;
// those that make the dialog fail become negatives. Fragments equal to the
// positive, or already tried for this site, are skipped. A sample is
// emitted only when at least one replacement flips the outcome, so groups
// without unsuccessful candidates yield nothing.
std::vector<SubgoalSample> DetectSubgoals(const CandidateGroup &group,
                                          const Database &db);

}  // namespace subgoal

#endif  // SUBGOAL_DETECTOR_H_
