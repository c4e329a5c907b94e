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

#ifndef SUBGOAL_RECORDS_H_
#define SUBGOAL_RECORDS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "subgoal/detector.h"

namespace subgoal {

struct SftRecord {
  std::string prompt;
  std::string target;
  SubgoalKind kind = SubgoalKind::kState;
  std::string goal_id;
  std::string dialog_id;
  size_t turn = 0;

  bool operator==(const SftRecord &) const = default;
};

struct PreferenceRecord {
  std::string prompt;
  std::string chosen;
  std::string rejected;
  SubgoalKind kind = SubgoalKind::kState;
  std::string goal_id;
  std::string dialog_id;
  size_t turn = 0;

  bool operator==(const PreferenceRecord &) const = default;
};

enum class PairPolicy {
  // One pair per sample, with the first negative whose text differs.
  kFirst,
  // Every negative, deduplicated on (prompt, chosen, rejected).
  kAll,
};

std::string_view PairPolicyName(PairPolicy policy);
// Accepts "first" and "all"; throws ValidationError otherwise.
PairPolicy ParsePairPolicy(std::string_view name);

// Prompt and target text of one fragment. Act/response fragments are
// prompted with `state`, the belief state of the positive turn.
std::string FragmentPrompt(const DialogContext &context, SubgoalKind kind,
                           const BeliefState &state);
std::string FragmentTarget(const SystemTurn &turn, SubgoalKind kind);

// Records come out sorted by (goal id, dialog id, turn, kind).
std::vector<SftRecord> EmitSft(const std::vector<SubgoalSample> &samples);
std::vector<PreferenceRecord> EmitDpo(const std::vector<SubgoalSample> &samples,
                                      PairPolicy policy);

nlohmann::ordered_json ToJson(const SftRecord &record);
nlohmann::ordered_json ToJson(const PreferenceRecord &record);
SftRecord SftRecordFromJson(const nlohmann::json &j);
PreferenceRecord PreferenceRecordFromJson(const nlohmann::json &j);

// One compact JSON object per line. Throws Error on I/O failure.
void WriteJsonl(const std::filesystem::path &path,
                const std::vector<nlohmann::ordered_json> &lines);
std::vector<nlohmann::json> ReadJsonl(const std::filesystem::path &path);

template <typename Record>
void WriteRecords(const std::filesystem::path &path,
                  const std::vector<Record> &records) {
  std::vector<nlohmann::ordered_json> lines;
  lines.reserve(records.size());
  for (const auto &record : records) lines.push_back(ToJson(record));
  WriteJsonl(path, lines);
}

}  // namespace subgoal

#endif  // SUBGOAL_RECORDS_H_
