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

#ifndef SUBGOAL_DATABASE_H_
#define SUBGOAL_DATABASE_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "subgoal/model.h"

namespace subgoal {

using Entity = std::map<std::string, std::string>;

// Reserved wildcard; matches any entity value.
inline constexpr std::string_view kDontCare = "dontcare";

// Per-domain entity tables. Immutable after construction.
class Database {
 public:
  Database() = default;

  // Throws ValidationError if a table belongs to an unknown or
  // non-entity-bearing domain, or an entity lacks the domain's key slot.
  Database(Ontology ontology, std::map<std::string, std::vector<Entity>> tables);

  const Ontology &ontology() const { return ontology_; }
  const std::vector<Entity> &Table(std::string_view domain) const;

  // Indices (file order) of the entities matching every constraint.
  // Values compare after NormalizeValue; "dontcare" matches anything.
  // Throws UnknownDomain for unknown or table-less domains and UnknownSlot
  // for slots that are not informable.
  std::vector<size_t> Match(std::string_view domain,
                            const SlotValues &constraints) const;

 private:
  Ontology ontology_;
  std::map<std::string, std::vector<Entity>, std::less<>> tables_;
  std::map<std::string, std::vector<Entity>, std::less<>> normalized_;
};

// Entities of `domain` satisfying `constraints`, in database order.
std::vector<Entity> Query(const Database &db, std::string_view domain,
                          const SlotValues &constraints);

}  // namespace subgoal

#endif  // SUBGOAL_DATABASE_H_
