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

#ifndef SUBGOAL_SCRIPTED_BACKEND_H_
#define SUBGOAL_SCRIPTED_BACKEND_H_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "subgoal/backend.h"
#include "subgoal/corpus.h"

namespace subgoal {

enum class ErrorType {
  kDropSlot,
  kWrongValue,
  kSwapDepartureDestination,
  kOmitRequestedSlot,
};

std::string_view ErrorTypeName(ErrorType type);
// Throws ValidationError for unknown names.
ErrorType ParseErrorType(std::string_view name);
// Stage an error type corrupts.
SubgoalKind ErrorStage(ErrorType type);

struct InjectionSite {
  std::string dialog_id;
  size_t turn = 0;
  ErrorType type = ErrorType::kWrongValue;
  // Sampled draws (1-based) to corrupt; empty means every sampled draw.
  // Greedy generations are never corrupted.
  std::vector<int> draws;
};

struct ErrorInjectionConfig {
  std::vector<InjectionSite> sites;
  // Probability of corrupting any sampled generation at random.
  double random_rate = 0.0;
  std::vector<ErrorType> random_types = {
      ErrorType::kDropSlot, ErrorType::kWrongValue,
      ErrorType::kSwapDepartureDestination, ErrorType::kOmitRequestedSlot};
};

// Applies one error to a system turn in place. `choice` picks among
// equivalent targets (which slot to drop, which wrong value to use).
// Returns false if the turn offers nothing to corrupt.
bool ApplyError(ErrorType type, const UserGoal &goal, const Database &db,
                uint64_t choice, SystemTurn *turn);

// Desk-scale stand-in for a trained model. Answers prompts of known
// dialogs with the ground-truth turn, rendered in the generation format.
// Sampled draws may be corrupted at configured sites, at random, and
// (with `diversify`) varied in ways that do not change dialog success.
// Prompts are resolved through the request's prompt id or, failing that,
// through the prompt text. Deterministic and safe for concurrent use.
class ScriptedBackend : public GeneratorBackend {
 public:
  ScriptedBackend(Corpus world, ErrorInjectionConfig noise, uint64_t seed,
                  bool diversify = false);

  std::vector<std::string> Generate(const GenerationRequest &request) override;

 private:
  struct Site {
    size_t dialog = 0;
    size_t turn = 0;
  };

  std::optional<Site> Resolve(const GenerationRequest &request) const;
  std::string Render(const Site &site, SubgoalKind stage, int draw,
                     uint64_t request_seed) const;

  Corpus world_;
  ErrorInjectionConfig noise_;
  uint64_t seed_;
  bool diversify_;
  std::unordered_map<std::string, size_t> dialog_index_;
  std::unordered_map<std::string, Site> prompt_index_;
};

}  // namespace subgoal

#endif  // SUBGOAL_SCRIPTED_BACKEND_H_
