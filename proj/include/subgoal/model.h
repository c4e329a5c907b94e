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

#ifndef SUBGOAL_MODEL_H_
#define SUBGOAL_MODEL_H_

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace subgoal {

using SlotValues = std::map<std::string, std::string>;

// Slot inventory of one domain.
struct DomainSchema {
  // Searchable database attributes.
  std::vector<std::string> informable;
  // Booking slots (bookday, bookpeople, ...). Allowed in goals and belief
  // states but never used to filter the database.
  std::vector<std::string> book;
  std::vector<std::string> requestable;
  std::vector<std::string> acts;
  bool entity_bearing = true;
  // Slot that names an entity; offers are detected by its placeholder.
  std::string key_slot = "name";

  bool IsInformable(std::string_view slot) const;
  bool IsStateSlot(std::string_view slot) const;
  bool IsRequestable(std::string_view slot) const;
};

class Ontology {
 public:
  // Throws ValidationError on duplicate slot names within the domain.
  void AddDomain(const std::string &name, DomainSchema schema);

  // Registers a domain that only appears in dialog acts ("booking",
  // "general").
  void AddActDomain(const std::string &name, std::vector<std::string> verbs);

  const DomainSchema *Find(std::string_view domain) const;
  const std::map<std::string, DomainSchema, std::less<>> &domains() const {
    return domains_;
  }
  const std::map<std::string, std::vector<std::string>, std::less<>>
      &act_domains() const {
    return act_domains_;
  }

  // True if `verb` is declared for any domain named in `domain_phrase`
  // (a space separated list such as "booking hotel").
  bool IsKnownAct(std::string_view domain_phrase, std::string_view verb) const;

 private:
  std::map<std::string, DomainSchema, std::less<>> domains_;
  std::map<std::string, std::vector<std::string>, std::less<>> act_domains_;
};

struct DomainGoal {
  SlotValues constraints;
  std::set<std::string> requests;

  auto operator<=>(const DomainGoal &) const = default;
};

struct UserGoal {
  std::string id;
  std::map<std::string, DomainGoal> domains;

  const DomainGoal *Find(std::string_view domain) const;
  auto operator<=>(const UserGoal &) const = default;
};

// domain -> slot -> value. Domains without slots are never stored.
struct BeliefState {
  std::map<std::string, SlotValues> domains;

  const SlotValues *Find(std::string_view domain) const;
  void Set(const std::string &domain, const std::string &slot,
           const std::string &value);
  bool empty() const { return domains.empty(); }

  auto operator<=>(const BeliefState &) const = default;
};

struct DialogAct {
  // May name several domains, e.g. "booking hotel".
  std::string domain;
  std::string act;
  std::optional<std::string> slot;

  auto operator<=>(const DialogAct &) const = default;
};

struct SystemTurn {
  BeliefState state;
  std::vector<DialogAct> acts;
  // Delexicalized, placeholders as [<domain>_<slot>].
  std::string response;

  auto operator<=>(const SystemTurn &) const = default;
};

struct Turn {
  std::string user;
  SystemTurn system;

  auto operator<=>(const Turn &) const = default;
};

struct Dialog {
  std::string id;
  std::string goal_id;
  std::vector<Turn> turns;

  size_t size() const { return turns.size(); }
  auto operator<=>(const Dialog &) const = default;
};

// Everything the system sees before producing turn `turn`.
struct DialogContext {
  std::string goal_id;
  std::string dialog_id;
  size_t turn = 0;
  std::vector<Turn> history;
  std::string user;

  bool operator==(const DialogContext &) const = default;
};

enum class SubgoalKind { kState, kActResponse };

std::string_view KindName(SubgoalKind kind);
// Accepts "state" and "act_response"; throws ValidationError otherwise.
SubgoalKind ParseKind(std::string_view name);

// Canonical response placeholder, "[hotel_name]".
std::string Placeholder(std::string_view domain, std::string_view slot);

}  // namespace subgoal

#endif  // SUBGOAL_MODEL_H_
