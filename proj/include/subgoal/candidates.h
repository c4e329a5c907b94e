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

#ifndef SUBGOAL_CANDIDATES_H_
#define SUBGOAL_CANDIDATES_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subgoal/corpus.h"
#include "subgoal/database.h"
#include "subgoal/model.h"
#include "subgoal/sampler.h"

namespace subgoal {

struct Candidate {
  // "<source id>#<index>", index zero-padded to three digits.
  std::string id;
  // Position in the fixed enumeration; 0 is the all-greedy dialog, j >= 1
  // combines state draw (j-1)/k with continuation draw (j-1)%k.
  int index = 0;
  bool greedy = false;
  bool success = false;
  Dialog dialog;
};

// Generated dialogs for one user goal, all on the user side of the
// ground-truth dialog.
struct CandidateGroup {
  std::string goal_id;
  UserGoal goal;
  Dialog source;
  std::vector<Candidate> candidates;

  size_t successful() const;
};

std::string CandidateId(const std::string &source_id, int index);

// Builds the greedy dialog plus k*k sampled combinations from one
// SampledTurnSet per source turn. Draw indices beyond the available draws
// are clamped; dialogs identical to an earlier one are dropped, keeping
// the first. Throws IncompleteSamples if `samples` does not cover every
// turn or a turn set lacks the draws the enumeration needs.
std::vector<Candidate> AssembleCandidates(
    const Dialog &source, const std::vector<SampledTurnSet> &samples, int k);

// Sets `success` of every candidate. Throws what the evaluator throws.
void LabelSuccess(CandidateGroup *group, const Database &db);

// {"goal_id", "source_id", "candidates": [{"id", "index", "greedy",
// "success", "turns"}]}; turns use the corpus turn layout.
nlohmann::ordered_json CandidateGroupToJson(const CandidateGroup &group);
// Resolves goal and source dialog in `corpus`. Throws ValidationError for
// unknown ids or candidates that do not follow the source's user turns.
CandidateGroup CandidateGroupFromJson(const nlohmann::json &j,
                                      const Corpus &corpus);

}  // namespace subgoal

#endif  // SUBGOAL_CANDIDATES_H_
