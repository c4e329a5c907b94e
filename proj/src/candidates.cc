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

#include "subgoal/candidates.h"

#include <algorithm>
#include <cstdio>

#include "subgoal/errors.h"
#include "subgoal/evaluator.h"

namespace subgoal {

namespace {

SystemTurn Compose(const StateOption &option, const Continuation &continuation) {
  return SystemTurn{option.state, continuation.acts, continuation.response};
}

size_t Clamp(size_t index, size_t size) { return std::min(index, size - 1); }

}  // namespace

size_t CandidateGroup::successful() const {
  return static_cast<size_t>(std::count_if(
      candidates.begin(), candidates.end(),
      [](const Candidate &c) { return c.success; }));
}

std::string CandidateId(const std::string &source_id, int index) {
  char suffix[16];
  std::snprintf(suffix, sizeof(suffix), "#%03d", index);
  return source_id + suffix;
}

std::vector<Candidate> AssembleCandidates(
    const Dialog &source, const std::vector<SampledTurnSet> &samples, int k) {
  if (samples.size() != source.turns.size()) {
    throw IncompleteSamples("dialog " + source.id + " has " +
                            std::to_string(source.turns.size()) +
                            " turns but " + std::to_string(samples.size()) +
                            " sampled turn sets");
  }
  const bool greedy = std::all_of(samples.begin(), samples.end(),
                                  [](const SampledTurnSet &s) {
                                    return s.has_greedy && !s.states.empty() &&
                                           !s.states[0].continuations.empty();
                                  });
  for (size_t t = 0; t < samples.size(); ++t) {
    const SampledTurnSet &set = samples[t];
    if (k > 0 && set.state_draws.empty()) {
      throw IncompleteSamples("dialog " + source.id + " turn " +
                              std::to_string(t) + " has no sampled states");
    }
    for (size_t draw : set.state_draws) {
      if (draw >= set.states.size() ||
          set.states[draw].continuation_draws.empty()) {
        throw IncompleteSamples("dialog " + source.id + " turn " +
                                std::to_string(t) +
                                " has a state without sampled continuations");
      }
    }
  }

  std::vector<Candidate> out;
  auto add = [&](int index, auto &&pick) {
    Dialog dialog = source;
    dialog.id = CandidateId(source.id, index);
    for (size_t t = 0; t < samples.size(); ++t) {
      dialog.turns[t].system = pick(samples[t]);
    }
    for (const auto &existing : out) {
      if (existing.dialog.turns == dialog.turns) return;
    }
    Candidate candidate;
    candidate.id = dialog.id;
    candidate.index = index;
    candidate.greedy = index == 0;
    candidate.dialog = std::move(dialog);
    out.push_back(std::move(candidate));
  };

  if (greedy) {
    add(0, [](const SampledTurnSet &set) {
      return Compose(set.states[0], set.states[0].continuations[0]);
    });
  }
  const size_t width = static_cast<size_t>(std::max(k, 0));
  for (size_t j = 1; j <= width * width; ++j) {
    add(static_cast<int>(j), [&](const SampledTurnSet &set) {
      const StateOption &option =
          set.states[set.state_draws[Clamp((j - 1) / width, set.state_draws.size())]];
      size_t c = option.continuation_draws[Clamp((j - 1) % width,
                                                 option.continuation_draws.size())];
      return Compose(option, option.continuations[c]);
    });
  }
  return out;
}

void LabelSuccess(CandidateGroup *group, const Database &db) {
  for (auto &candidate : group->candidates) {
    candidate.success = DialogSuccess(candidate.dialog, group->goal, db);
  }
}

nlohmann::ordered_json CandidateGroupToJson(const CandidateGroup &group) {
  nlohmann::ordered_json j;
  j["goal_id"] = group.goal_id;
  j["source_id"] = group.source.id;
  j["candidates"] = nlohmann::ordered_json::array();
  for (const auto &candidate : group.candidates) {
    nlohmann::ordered_json c;
    c["id"] = candidate.id;
    c["index"] = candidate.index;
    c["greedy"] = candidate.greedy;
    c["success"] = candidate.success;
    c["turns"] = nlohmann::ordered_json::array();
    for (const auto &turn : candidate.dialog.turns) {
      c["turns"].push_back(TurnToJson(turn));
    }
    j["candidates"].push_back(std::move(c));
  }
  return j;
}

CandidateGroup CandidateGroupFromJson(const nlohmann::json &j,
                                      const Corpus &corpus) {
  CandidateGroup group;
  std::string source_id;
  try {
    group.goal_id = j.at("goal_id").get<std::string>();
    source_id = j.at("source_id").get<std::string>();
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError(std::string("malformed candidate group: ") + e.what());
  }
  const Dialog *source = corpus.FindDialog(source_id);
  if (source == nullptr) {
    throw ValidationError("candidate group refers to unknown dialog " + source_id);
  }
  auto goal = corpus.goals.find(group.goal_id);
  if (goal == corpus.goals.end()) {
    throw ValidationError("candidate group refers to unknown goal " + group.goal_id);
  }
  group.source = *source;
  group.goal = goal->second;
  try {
    for (const auto &c : j.at("candidates")) {
      Candidate candidate;
      candidate.id = c.at("id").get<std::string>();
      candidate.index = c.at("index").get<int>();
      candidate.greedy = c.value("greedy", candidate.index == 0);
      candidate.success = c.value("success", false);
      candidate.dialog.id = candidate.id;
      candidate.dialog.goal_id = group.goal_id;
      for (const auto &t : c.at("turns")) {
        candidate.dialog.turns.push_back(TurnFromJson(t));
      }
      if (candidate.dialog.turns.size() != source->turns.size()) {
        throw ValidationError("candidate " + candidate.id + " has " +
                              std::to_string(candidate.dialog.turns.size()) +
                              " turns, source has " +
                              std::to_string(source->turns.size()));
      }
      for (size_t t = 0; t < source->turns.size(); ++t) {
        if (candidate.dialog.turns[t].user != source->turns[t].user) {
          throw ValidationError("candidate " + candidate.id +
                                " diverges from the source user turn " +
                                std::to_string(t));
        }
      }
      group.candidates.push_back(std::move(candidate));
    }
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError(std::string("malformed candidate: ") + e.what());
  }
  return group;
}

}  // namespace subgoal
