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

#ifndef SUBGOAL_EVALUATOR_H_
#define SUBGOAL_EVALUATOR_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "subgoal/database.h"
#include "subgoal/model.h"

namespace subgoal {

struct DomainOutcome {
  std::string domain;
  bool inform = false;
  bool success = false;
  // Key-slot values of the entities matched at the last offer turn.
  std::vector<std::string> offered;
};

// INFORM/SUCCESS for one goal domain of a dialog.
//
// An offer turn is a system turn whose response contains the domain's key
// placeholder ([hotel_name], [train_id]). INFORM holds if the entities
// matched by the belief state of the last offer turn are non-empty and
// share at least one entity with the entities matching the goal
// constraints. Without any offer turn INFORM holds only for goals without
// informable constraints. Domains without a database table always INFORM.
// SUCCESS additionally needs every requested slot placeholder in some
// system response. Reads only system turns.
//
// Throws NotInGoal if `domain` is not part of `goal`.
DomainOutcome EvaluateDomain(const Dialog &dialog, const UserGoal &goal,
                             const Database &db, std::string_view domain);

// True iff every goal domain succeeds.
bool DialogSuccess(const Dialog &dialog, const UserGoal &goal,
                   const Database &db);

double Combined(double bleu, double inform_rate, double success_rate);

struct DomainRates {
  double inform = 0;
  double success = 0;
  size_t dialogs = 0;
};

struct EvalReport {
  double bleu = 0;
  double inform_rate = 0;
  double success_rate = 0;
  double combined = 0;
  size_t dialogs = 0;
  std::map<std::string, DomainRates> per_domain;
};

// Rates are percentages over dialogs; a dialog informs if all of its goal
// domains inform. Per-domain rates only count dialogs whose goal contains
// the domain. `references[i]` holds one reference response per turn of
// `dialogs[i]`; BLEU pairs them with the dialog's system responses.
//
// Throws MissingGoal for unresolved goal ids and LengthMismatch when the
// reference layout does not match the dialogs.
EvalReport EvaluateCorpus(const std::vector<Dialog> &dialogs,
                          const std::map<std::string, UserGoal> &goals,
                          const Database &db,
                          const std::vector<std::vector<std::string>> &references);

nlohmann::ordered_json ToJson(const EvalReport &report);

// Column order of the domain breakdown table.
const std::vector<std::string> &ReportDomainOrder();

// Fixed-width INFORM/SUCCESS table, one column per domain.
std::string FormatDomainTable(const EvalReport &report);

}  // namespace subgoal

#endif  // SUBGOAL_EVALUATOR_H_
