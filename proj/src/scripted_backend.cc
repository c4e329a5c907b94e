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

#include "subgoal/scripted_backend.h"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <set>

#include "subgoal/dialog.h"
#include "subgoal/errors.h"
#include "subgoal/prompt.h"
#include "subgoal/text.h"
#include "subgoal/verbalize.h"

namespace subgoal {

namespace {

constexpr std::string_view kClosings[] = {
    "is there anything else i can help with?",
    "anything else for you today?",
    "let me know if you need more help.",
    "can i help with anything else?",
};

bool DropSlot(uint64_t choice, SystemTurn *turn) {
  std::vector<std::pair<std::string, std::string>> slots;
  for (const auto &[domain, values] : turn->state.domains) {
    for (const auto &[slot, value] : values) slots.emplace_back(domain, slot);
  }
  if (slots.empty()) return false;
  const auto &[domain, slot] = slots[choice % slots.size()];
  auto &values = turn->state.domains[domain];
  values.erase(slot);
  if (values.empty()) turn->state.domains.erase(domain);
  return true;
}

bool WrongValue(const UserGoal &goal, const Database &db, uint64_t choice,
                SystemTurn *turn) {
  std::vector<std::pair<std::string, std::string>> preferred, fallback;
  for (const auto &[domain, values] : turn->state.domains) {
    const DomainSchema *schema = db.ontology().Find(domain);
    if (schema == nullptr || !schema->entity_bearing) continue;
    const DomainGoal *domain_goal = goal.Find(domain);
    for (const auto &[slot, value] : values) {
      if (!schema->IsInformable(slot)) continue;
      fallback.emplace_back(domain, slot);
      if (domain_goal != nullptr && domain_goal->constraints.contains(slot)) {
        preferred.emplace_back(domain, slot);
      }
    }
  }
  const auto &candidates = preferred.empty() ? fallback : preferred;
  if (candidates.empty()) return false;
  const auto &[domain, slot] = candidates[choice % candidates.size()];
  std::string &value = turn->state.domains[domain][slot];
  const std::string current = NormalizeValue(value);
  std::set<std::string> alternatives;
  for (const auto &entity : db.Table(domain)) {
    auto it = entity.find(slot);
    if (it != entity.end() && NormalizeValue(it->second) != current &&
        NormalizeValue(it->second) != kDontCare) {
      alternatives.insert(it->second);
    }
  }
  if (alternatives.empty()) {
    value = current == "unknown" ? "unknown value" : "unknown";
    return true;
  }
  auto it = alternatives.begin();
  std::advance(it, MixSeed(choice, 1) % alternatives.size());
  value = *it;
  return true;
}

bool SwapDepartureDestination(SystemTurn *turn) {
  for (auto &[domain, values] : turn->state.domains) {
    auto departure = values.find("departure");
    auto destination = values.find("destination");
    if (departure == values.end() || destination == values.end()) continue;
    if (NormalizeValue(departure->second) == NormalizeValue(destination->second)) {
      continue;
    }
    std::swap(departure->second, destination->second);
    return true;
  }
  return false;
}

void RemoveAll(std::string *text, const std::string &needle) {
  size_t pos;
  while ((pos = text->find(needle)) != std::string::npos) {
    text->erase(pos, needle.size());
  }
  // Collapse the double spaces left behind.
  std::string cleaned;
  for (char c : *text) {
    if (c == ' ' && !cleaned.empty() && cleaned.back() == ' ') continue;
    cleaned.push_back(c);
  }
  *text = std::string(Trim(cleaned));
}

bool OmitRequestedSlot(const UserGoal &goal, SystemTurn *turn) {
  for (const auto &[domain, domain_goal] : goal.domains) {
    for (const auto &slot : domain_goal.requests) {
      const std::string placeholder = Placeholder(domain, slot);
      if (turn->response.find(placeholder) == std::string::npos) continue;
      RemoveAll(&turn->response, placeholder);
      std::erase_if(turn->acts, [&](const DialogAct &act) {
        if (act.slot != slot) return false;
        auto tokens = SplitWhitespace(act.domain);
        return std::find(tokens.begin(), tokens.end(), domain) != tokens.end();
      });
      return true;
    }
  }
  return false;
}

void AddBenignSlot(const Ontology &ontology, int draw, BeliefState *state) {
  std::vector<std::pair<std::string, std::string>> free;
  for (const auto &[domain, values] : state->domains) {
    const DomainSchema *schema = ontology.Find(domain);
    if (schema == nullptr) continue;
    for (const auto &slot : schema->informable) {
      if (!values.contains(slot)) free.emplace_back(domain, slot);
    }
  }
  if (free.empty()) return;
  const auto &[domain, slot] = free[static_cast<size_t>(draw - 1) % free.size()];
  state->Set(domain, slot, std::string(kDontCare));
}

}  // namespace

std::string_view ErrorTypeName(ErrorType type) {
  switch (type) {
    case ErrorType::kDropSlot:
      return "drop_slot";
    case ErrorType::kWrongValue:
      return "wrong_value";
    case ErrorType::kSwapDepartureDestination:
      return "swap_departure_destination";
    case ErrorType::kOmitRequestedSlot:
      return "omit_requested_slot";
  }
  return "unknown";
}

ErrorType ParseErrorType(std::string_view name) {
  for (ErrorType type :
       {ErrorType::kDropSlot, ErrorType::kWrongValue,
        ErrorType::kSwapDepartureDestination, ErrorType::kOmitRequestedSlot}) {
    if (ErrorTypeName(type) == name) return type;
  }
  throw ValidationError("unknown error type: " + std::string(name));
}

SubgoalKind ErrorStage(ErrorType type) {
  return type == ErrorType::kOmitRequestedSlot ? SubgoalKind::kActResponse
                                               : SubgoalKind::kState;
}

bool ApplyError(ErrorType type, const UserGoal &goal, const Database &db,
                uint64_t choice, SystemTurn *turn) {
  switch (type) {
    case ErrorType::kDropSlot:
      return DropSlot(choice, turn);
    case ErrorType::kWrongValue:
      return WrongValue(goal, db, choice, turn);
    case ErrorType::kSwapDepartureDestination:
      return SwapDepartureDestination(turn);
    case ErrorType::kOmitRequestedSlot:
      return OmitRequestedSlot(goal, turn);
  }
  return false;
}

ScriptedBackend::ScriptedBackend(Corpus world, ErrorInjectionConfig noise,
                                 uint64_t seed, bool diversify)
    : world_(std::move(world)),
      noise_(std::move(noise)),
      seed_(seed),
      diversify_(diversify) {
  for (size_t i = 0; i < world_.dialogs.size(); ++i) {
    const Dialog &dialog = world_.dialogs[i];
    dialog_index_.emplace(dialog.id, i);
    for (size_t t = 0; t < dialog.turns.size(); ++t) {
      prompt_index_.emplace(SerializeStatePrompt(ContextAt(dialog, t)).text,
                            Site{i, t});
    }
  }
}

std::optional<ScriptedBackend::Site> ScriptedBackend::Resolve(
    const GenerationRequest &request) const {
  size_t at = request.prompt_id.rfind('@');
  if (at != std::string::npos) {
    auto dialog = dialog_index_.find(request.prompt_id.substr(0, at));
    size_t turn = 0;
    const char *first = request.prompt_id.data() + at + 1;
    const char *last = request.prompt_id.data() + request.prompt_id.size();
    auto [ptr, ec] = std::from_chars(first, last, turn);
    if (dialog != dialog_index_.end() && ec == std::errc() && ptr == last &&
        turn < world_.dialogs[dialog->second].turns.size()) {
      return Site{dialog->second, turn};
    }
  }
  auto it = prompt_index_.find(std::string(StatePromptPrefix(request.prompt)));
  if (it != prompt_index_.end()) return it->second;
  return std::nullopt;
}

std::string ScriptedBackend::Render(const Site &site, SubgoalKind stage,
                                    int draw, uint64_t request_seed) const {
  const Dialog &dialog = world_.dialogs[site.dialog];
  const UserGoal &goal = world_.goals.at(dialog.goal_id);
  SystemTurn turn = dialog.turns[site.turn].system;
  if (draw > 0) {
    if (diversify_) {
      if (stage == SubgoalKind::kState) {
        AddBenignSlot(world_.ontology(), draw, &turn.state);
      } else {
        std::string_view closing =
            kClosings[static_cast<size_t>(draw - 1) % std::size(kClosings)];
        if (!turn.response.empty()) turn.response += ' ';
        turn.response += closing;
      }
    }
    for (const auto &s : noise_.sites) {
      if (s.dialog_id != dialog.id || s.turn != site.turn ||
          ErrorStage(s.type) != stage) {
        continue;
      }
      if (!s.draws.empty() &&
          std::find(s.draws.begin(), s.draws.end(), draw) == s.draws.end()) {
        continue;
      }
      ApplyError(s.type, goal, world_.db, MixSeed(seed_, draw), &turn);
    }
    if (noise_.random_rate > 0) {
      uint64_t h = MixSeed(MixSeed(seed_, Fnv1a64(dialog.id)),
                           MixSeed(site.turn * 2 + (stage == SubgoalKind::kState ? 0 : 1),
                                   MixSeed(static_cast<uint64_t>(draw), request_seed)));
      if (UnitInterval(h) < noise_.random_rate) {
        std::vector<ErrorType> types;
        for (ErrorType type : noise_.random_types) {
          if (ErrorStage(type) == stage) types.push_back(type);
        }
        if (!types.empty()) {
          ErrorType type = types[MixSeed(h, 7) % types.size()];
          ApplyError(type, goal, world_.db, MixSeed(h, 13), &turn);
        }
      }
    }
  }
  return stage == SubgoalKind::kState
             ? StateTarget(turn.state)
             : ActResponseTarget(turn.acts, turn.response);
}

std::vector<std::string> ScriptedBackend::Generate(
    const GenerationRequest &request) {
  std::optional<Site> site = Resolve(request);
  if (!site.has_value()) {
    throw BackendError(BackendError::Kind::kUnknownPrompt, request.prompt_id, 0,
                       "scripted backend has no dialog for this prompt");
  }
  SubgoalKind stage = StatePromptPrefix(request.prompt).size() == request.prompt.size()
                          ? SubgoalKind::kState
                          : SubgoalKind::kActResponse;
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(std::max(request.n, 0)));
  for (int i = 0; i < request.n; ++i) {
    int draw = request.greedy ? 0 : i + 1;
    out.push_back(Render(*site, stage, draw, request.seed));
  }
  return out;
}

}  // namespace subgoal
