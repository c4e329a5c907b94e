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

#ifndef SUBGOAL_SAMPLER_H_
#define SUBGOAL_SAMPLER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "subgoal/backend.h"
#include "subgoal/model.h"

namespace subgoal {

struct SamplingConfig {
  int k = 2;
  double temperature = 1.0;
  uint64_t seed = 0;
  bool include_greedy = true;
  int max_tokens = 256;
};

struct Continuation {
  std::vector<DialogAct> acts;
  std::string response;

  bool operator==(const Continuation &) const = default;
};

struct StateOption {
  BeliefState state;
  // Distinct continuations; [0] is the greedy one when greedy decoding is
  // enabled.
  std::vector<Continuation> continuations;
  // Sampled continuation draws, as indices into `continuations`. Empty for
  // states that no sampled state draw landed on.
  std::vector<size_t> continuation_draws;
};

// Generations for one dialog context: a greedy state plus k sampled state
// draws, and per distinct state a greedy continuation plus k sampled ones.
// Identical generations are merged, so draws may share an entry.
struct SampledTurnSet {
  bool has_greedy = true;
  // Distinct states; [0] is the greedy state when has_greedy.
  std::vector<StateOption> states;
  // Sampled state draws, as indices into `states`.
  std::vector<size_t> state_draws;
  // Parse problems of the raw generations; never fatal.
  std::vector<std::string> diagnostics;
};

// Queries the backend for one context. Request seeds derive from
// `config.seed` and the prompt text, so results do not depend on call
// order. Throws BackendError.
SampledTurnSet SampleTurn(GeneratorBackend &backend,
                          const DialogContext &context,
                          const SamplingConfig &config);

// Greedy system turn (state, then acts and response) for a context.
SystemTurn GreedyTurn(GeneratorBackend &backend, const DialogContext &context,
                      const SamplingConfig &config,
                      std::vector<std::string> *diagnostics);

std::string PromptId(const DialogContext &context);

}  // namespace subgoal

#endif  // SUBGOAL_SAMPLER_H_
