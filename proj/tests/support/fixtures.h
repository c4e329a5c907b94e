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

#ifndef SUBGOAL_TESTS_SUPPORT_FIXTURES_H_
#define SUBGOAL_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <string>
#include <vector>

#include "subgoal/candidates.h"
#include "subgoal/corpus.h"
#include "subgoal/database.h"
#include "subgoal/model.h"

namespace subgoal::testing {

// hotel, train (entity bearing) and taxi (no table), plus the booking and
// general act domains.
Ontology SmallOntology();

// Three hotels (two moderate ones in the north) and two trains.
Database SmallDatabase();
std::map<std::string, std::vector<Entity>> SmallTables();

SystemTurn Sys(BeliefState state, std::vector<DialogAct> acts, std::string response);
BeliefState HotelState(std::map<std::string, std::string> slots);

// Four-turn hotel booking: north, moderate, wifi; the address is requested.
UserGoal HotelGoal();
Dialog HotelDialog();

// Successful dialog "s" and unsuccessful dialogs "o", "j", "u" for one
// goal. o carries a wrong state at turn 1 and a failing answer at turn 3,
// j a harmless variant at turn 2 and a failing answer at turn 3, u a
// failing answer at turn 4.
CandidateGroup ContrastGroup();

// Ten hotel dialogs with per-dialog reference responses; seven succeed,
// eight inform.
struct SmallCorpus {
  Corpus corpus;
  std::vector<std::vector<std::string>> references;
};
SmallCorpus TenDialogs();

// Corpus holding the hotel dialog, for CLI and iteration tests.
Corpus HotelCorpus();

// Fresh empty directory under the system temp directory.
std::filesystem::path TempDir(const std::string &name);

std::string ReadFile(const std::filesystem::path &path);
void WriteFile(const std::filesystem::path &path, const std::string &text);

}  // namespace subgoal::testing

#endif  // SUBGOAL_TESTS_SUPPORT_FIXTURES_H_
