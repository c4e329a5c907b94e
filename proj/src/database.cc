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

#include "subgoal/database.h"

#include "subgoal/errors.h"
#include "subgoal/text.h"

namespace subgoal {

Database::Database(Ontology ontology,
                   std::map<std::string, std::vector<Entity>> tables)
    : ontology_(std::move(ontology)) {
  for (auto &[domain, entities] : tables) {
    const DomainSchema *schema = ontology_.Find(domain);
    if (schema == nullptr) {
      throw ValidationError("database table for unknown domain: " + domain);
    }
    if (!schema->entity_bearing) {
      throw ValidationError("database table for non-entity domain: " + domain);
    }
    std::vector<Entity> normalized;
    normalized.reserve(entities.size());
    for (size_t i = 0; i < entities.size(); ++i) {
      if (!entities[i].contains(schema->key_slot)) {
        throw ValidationError(domain + " entity #" + std::to_string(i) +
                              " lacks key slot '" + schema->key_slot + "'");
      }
      Entity n;
      for (const auto &[slot, value] : entities[i]) {
        n[slot] = NormalizeValue(value);
      }
      normalized.push_back(std::move(n));
    }
    normalized_[domain] = std::move(normalized);
    tables_[domain] = std::move(entities);
  }
  // Entity-bearing domains without a table behave as empty tables.
  for (const auto &[domain, schema] : ontology_.domains()) {
    if (schema.entity_bearing && !tables_.contains(domain)) {
      tables_[domain];
      normalized_[domain];
    }
  }
}

const std::vector<Entity> &Database::Table(std::string_view domain) const {
  auto it = tables_.find(domain);
  if (it == tables_.end()) throw UnknownDomain(std::string(domain));
  return it->second;
}

std::vector<size_t> Database::Match(std::string_view domain,
                                    const SlotValues &constraints) const {
  const DomainSchema *schema = ontology_.Find(domain);
  auto table = normalized_.find(domain);
  if (schema == nullptr || !schema->entity_bearing ||
      table == normalized_.end()) {
    throw UnknownDomain(std::string(domain));
  }
  std::vector<std::pair<std::string_view, std::string>> filters;
  for (const auto &[slot, value] : constraints) {
    if (!schema->IsInformable(slot)) {
      throw UnknownSlot(std::string(domain), slot);
    }
    std::string normalized = NormalizeValue(value);
    if (normalized == kDontCare) continue;
    filters.emplace_back(slot, std::move(normalized));
  }
  std::vector<size_t> out;
  const auto &entities = table->second;
  for (size_t i = 0; i < entities.size(); ++i) {
    bool ok = true;
    for (const auto &[slot, value] : filters) {
      auto it = entities[i].find(std::string(slot));
      if (it == entities[i].end() || it->second != value) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(i);
  }
  return out;
}

std::vector<Entity> Query(const Database &db, std::string_view domain,
                          const SlotValues &constraints) {
  std::vector<Entity> out;
  const auto &table = db.Table(domain);
  for (size_t i : db.Match(domain, constraints)) out.push_back(table[i]);
  return out;
}

}  // namespace subgoal
