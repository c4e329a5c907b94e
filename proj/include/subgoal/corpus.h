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

#ifndef SUBGOAL_CORPUS_H_
#define SUBGOAL_CORPUS_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subgoal/database.h"
#include "subgoal/model.h"

namespace subgoal {

// Ontology, database and goal-annotated dialogs of one data split.
//
// File layout (JSON):
//   {"ontology": {"domains": {"hotel": {"informable": [...], "book": [...],
//                                       "requestable": [...], "acts": [...],
//                                       "entity_bearing": true,
//                                       "key_slot": "name"}, ...},
//                 "act_domains": {"booking": ["inform", "book"], ...}},
//    "database": {"hotel": [{"name": "...", "area": "..."}, ...], ...},
//    "dialogs": [{"id": "...", "goal_id": "...",
//                 "goal": {"hotel": {"constraints": {...}, "requests": [...]}},
//                 "turns": [{"user": "...", "state": {"hotel": {...}},
//                            "acts": [{"domain": "hotel", "act": "inform",
//                                      "slot": "name"}],
//                            "response": "..."}]}]}
// "goal_id" defaults to the dialog id.
struct Corpus {
  Database db;
  std::vector<Dialog> dialogs;
  std::map<std::string, UserGoal> goals;

  const Ontology &ontology() const { return db.ontology(); }
  const Dialog *FindDialog(const std::string &id) const;
};

// Reads a JSON file. Syntax errors become ValidationError with line and
// column of the offending byte.
nlohmann::json ReadJsonFile(const std::filesystem::path &path);

nlohmann::json ParseJsonText(const std::string &text, const std::string &origin);

Ontology OntologyFromJson(const nlohmann::json &j);
nlohmann::ordered_json OntologyToJson(const Ontology &ontology);

Dialog DialogFromJson(const nlohmann::json &j);
nlohmann::ordered_json DialogToJson(const Dialog &dialog);
nlohmann::ordered_json TurnToJson(const Turn &turn);
Turn TurnFromJson(const nlohmann::json &j);

UserGoal GoalFromJson(const std::string &id, const nlohmann::json &j);
nlohmann::ordered_json GoalToJson(const UserGoal &goal);

// Parses and validates. Throws ValidationError.
Corpus CorpusFromJson(const nlohmann::json &j);
nlohmann::ordered_json CorpusToJson(const Corpus &corpus);

Corpus LoadCorpus(const std::filesystem::path &path);
void SaveCorpus(const Corpus &corpus, const std::filesystem::path &path);

// Checks goals, states, acts and response placeholders against the
// ontology. Throws ValidationError naming the first offending dialog.
void ValidateCorpus(const Corpus &corpus);

// Predicted dialogs ({"dialogs": [{"id", "turns"}]}); goal ids default to
// the dialog id.
std::vector<Dialog> LoadDialogs(const std::filesystem::path &path);

}  // namespace subgoal

#endif  // SUBGOAL_CORPUS_H_
