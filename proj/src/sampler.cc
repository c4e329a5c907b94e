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

#include "subgoal/sampler.h"

#include <algorithm>

#include "subgoal/prompt.h"
#include "subgoal/text.h"
#include "subgoal/verbalize.h"

namespace subgoal {

namespace {

enum Purpose : uint64_t { kGreedy = 0, kSampled = 1 };

std::vector<std::string> Request(GeneratorBackend &backend,
                                 const std::string &prompt,
                                 const std::string &prompt_id, int n,
                                 Purpose purpose,
                                 const SamplingConfig &config) {
  GenerationRequest request;
  request.prompt = prompt;
  request.prompt_id = prompt_id;
  request.n = n;
  request.greedy = purpose == kGreedy;
  request.temperature = config.temperature;
  request.seed = MixSeed(MixSeed(config.seed, Fnv1a64(prompt)), purpose);
  request.max_tokens = config.max_tokens;
  std::vector<std::string> out = backend.Generate(request);
  if (out.size() != static_cast<size_t>(n)) {
    throw BackendError(BackendError::Kind::kSchema, prompt_id, 0,
                       "expected " + std::to_string(n) + " completions, got " +
                           std::to_string(out.size()));
  }
  return out;
}

template <typename T>
size_t InsertUnique(std::vector<T> *items, T item) {
  auto it = std::find(items->begin(), items->end(), item);
  if (it != items->end()) return static_cast<size_t>(it - items->begin());
  items->push_back(std::move(item));
  return items->size() - 1;
}

void Note(std::vector<std::string> *out, const std::string &prompt_id,
          const std::vector<std::string> &diagnostics) {
  if (out == nullptr) return;
  for (const auto &d : diagnostics) out->push_back(prompt_id + ": " + d);
}

}  // namespace

std::string PromptId(const DialogContext &context) {
  return context.dialog_id + "@" + std::to_string(context.turn);
}

SampledTurnSet SampleTurn(GeneratorBackend &backend,
                          const DialogContext &context,
                          const SamplingConfig &config) {
  SampledTurnSet set;
  set.has_greedy = config.include_greedy;
  const std::string prompt_id = PromptId(context);
  const std::string state_prompt = SerializeStatePrompt(context).text;

  std::vector<BeliefState> states;
  auto add_state = [&](const std::string &text) {
    StateParse parsed = ParseState(text);
    Note(&set.diagnostics, prompt_id, parsed.diagnostics);
    return InsertUnique(&states, std::move(parsed.state));
  };
  if (config.include_greedy) {
    add_state(Request(backend, state_prompt, prompt_id, 1, kGreedy, config)[0]);
  }
  if (config.k > 0) {
    for (const auto &text :
         Request(backend, state_prompt, prompt_id, config.k, kSampled, config)) {
      set.state_draws.push_back(add_state(text));
    }
  }

  for (size_t i = 0; i < states.size(); ++i) {
    StateOption option;
    option.state = states[i];
    const std::string act_prompt = SerializeActPrompt(context, states[i]).text;
    auto add_continuation = [&](const std::string &text) {
      ActResponseParse parsed = ParseActResponse(text);
      Note(&set.diagnostics, prompt_id, parsed.diagnostics);
      return InsertUnique(&option.continuations,
                          Continuation{std::move(parsed.acts),
                                       std::move(parsed.response)});
    };
    if (config.include_greedy) {
      add_continuation(
          Request(backend, act_prompt, prompt_id, 1, kGreedy, config)[0]);
    }
    bool drawn = std::find(set.state_draws.begin(), set.state_draws.end(), i) !=
                 set.state_draws.end();
    if (drawn) {
      for (const auto &text :
           Request(backend, act_prompt, prompt_id, config.k, kSampled, config)) {
        option.continuation_draws.push_back(add_continuation(text));
      }
    }
    set.states.push_back(std::move(option));
  }
  return set;
}

SystemTurn GreedyTurn(GeneratorBackend &backend, const DialogContext &context,
                      const SamplingConfig &config,
                      std::vector<std::string> *diagnostics) {
  const std::string prompt_id = PromptId(context);
  SystemTurn turn;
  StateParse state = ParseState(Request(backend,
                                        SerializeStatePrompt(context).text,
                                        prompt_id, 1, kGreedy, config)[0]);
  Note(diagnostics, prompt_id, state.diagnostics);
  turn.state = std::move(state.state);
  ActResponseParse continuation = ParseActResponse(
      Request(backend, SerializeActPrompt(context, turn.state).text, prompt_id,
              1, kGreedy, config)[0]);
  Note(diagnostics, prompt_id, continuation.diagnostics);
  turn.acts = std::move(continuation.acts);
  turn.response = std::move(continuation.response);
  return turn;
}

}  // namespace subgoal
