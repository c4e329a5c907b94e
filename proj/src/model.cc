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

#include "subgoal/model.h"

#include <algorithm>

#include "subgoal/errors.h"
#include "subgoal/text.h"

namespace subgoal {

namespace {

bool Contains(const std::vector<std::string> &v, std::string_view s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

bool DomainSchema::IsInformable(std::string_view slot) const {
  return Contains(informable, slot);
}

bool DomainSchema::IsStateSlot(std::string_view slot) const {
  return Contains(informable, slot) || Contains(book, slot);
}

bool DomainSchema::IsRequestable(std::string_view slot) const {
  return Contains(requestable, slot);
}

void Ontology::AddDomain(const std::string &name, DomainSchema schema) {
  if (name.empty()) throw ValidationError("empty domain name");
  std::set<std::string> seen;
  for (const auto *list : {&schema.informable, &schema.book}) {
    for (const auto &slot : *list) {
      if (!seen.insert(slot).second) {
        throw ValidationError("duplicate slot '" + slot + "' in domain " +
                              name);
      }
    }
  }
  std::set<std::string> requestable(schema.requestable.begin(),
                                    schema.requestable.end());
  if (requestable.size() != schema.requestable.size()) {
    throw ValidationError("duplicate requestable slot in domain " + name);
  }
  domains_[name] = std::move(schema);
}

void Ontology::AddActDomain(const std::string &name,
                            std::vector<std::string> verbs) {
  act_domains_[name] = std::move(verbs);
}

const DomainSchema *Ontology::Find(std::string_view domain) const {
  auto it = domains_.find(domain);
  return it == domains_.end() ? nullptr : &it->second;
}

bool Ontology::IsKnownAct(std::string_view domain_phrase,
                          std::string_view verb) const {
  for (const auto &token : SplitWhitespace(domain_phrase)) {
    if (const auto *schema = Find(token)) {
      if (Contains(schema->acts, verb)) return true;
      continue;
    }
    auto it = act_domains_.find(token);
    if (it != act_domains_.end() && Contains(it->second, verb)) return true;
  }
  return false;
}

const DomainGoal *UserGoal::Find(std::string_view domain) const {
  for (const auto &[name, goal] : domains) {
    if (name == domain) return &goal;
  }
  return nullptr;
}

const SlotValues *BeliefState::Find(std::string_view domain) const {
  for (const auto &[name, slots] : domains) {
    if (name == domain) return &slots;
  }
  return nullptr;
}

void BeliefState::Set(const std::string &domain, const std::string &slot,
                      const std::string &value) {
  domains[domain][slot] = value;
}

std::string_view KindName(SubgoalKind kind) {
  return kind == SubgoalKind::kState ? "state" : "act_response";
}

SubgoalKind ParseKind(std::string_view name) {
  if (name == "state") return SubgoalKind::kState;
  if (name == "act_response") return SubgoalKind::kActResponse;
  throw ValidationError("unknown subgoal kind: " + std::string(name));
}

std::string Placeholder(std::string_view domain, std::string_view slot) {
  std::string out;
  out.reserve(domain.size() + slot.size() + 3);
  out += '[';
  out += domain;
  out += '_';
  out += slot;
  out += ']';
  return out;
}

}  // namespace subgoal
