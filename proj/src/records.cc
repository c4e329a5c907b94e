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

#include "subgoal/records.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <tuple>

#include "subgoal/corpus.h"
#include "subgoal/errors.h"
#include "subgoal/prompt.h"
#include "subgoal/verbalize.h"

namespace subgoal {

namespace {

template <typename Record>
void SortRecords(std::vector<Record> *records) {
  std::stable_sort(records->begin(), records->end(),
                   [](const Record &a, const Record &b) {
                     return std::tie(a.goal_id, a.dialog_id, a.turn, a.kind) <
                            std::tie(b.goal_id, b.dialog_id, b.turn, b.kind);
                   });
}

}  // namespace

std::string_view PairPolicyName(PairPolicy policy) {
  return policy == PairPolicy::kFirst ? "first" : "all";
}

PairPolicy ParsePairPolicy(std::string_view name) {
  if (name == "first") return PairPolicy::kFirst;
  if (name == "all") return PairPolicy::kAll;
  throw ValidationError("unknown pair policy: " + std::string(name));
}

std::string FragmentPrompt(const DialogContext &context, SubgoalKind kind,
                           const BeliefState &state) {
  return kind == SubgoalKind::kState ? SerializeStatePrompt(context).text
                                     : SerializeActPrompt(context, state).text;
}

std::string FragmentTarget(const SystemTurn &turn, SubgoalKind kind) {
  return kind == SubgoalKind::kState ? StateTarget(turn.state)
                                     : ActResponseTarget(turn.acts, turn.response);
}

std::vector<SftRecord> EmitSft(const std::vector<SubgoalSample> &samples) {
  std::vector<SftRecord> out;
  out.reserve(samples.size());
  for (const auto &sample : samples) {
    out.push_back({FragmentPrompt(sample.context, sample.kind, sample.positive.state),
                   FragmentTarget(sample.positive, sample.kind), sample.kind,
                   sample.goal_id, sample.dialog_id, sample.turn});
  }
  SortRecords(&out);
  return out;
}

std::vector<PreferenceRecord> EmitDpo(const std::vector<SubgoalSample> &samples,
                                      PairPolicy policy) {
  std::vector<PreferenceRecord> out;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (const auto &sample : samples) {
    const std::string prompt =
        FragmentPrompt(sample.context, sample.kind, sample.positive.state);
    const std::string chosen = FragmentTarget(sample.positive, sample.kind);
    for (const auto &negative : sample.negatives) {
      std::string rejected = FragmentTarget(negative, sample.kind);
      if (rejected == chosen) continue;
      if (policy == PairPolicy::kAll &&
          !seen.emplace(prompt, chosen, rejected).second) {
        continue;
      }
      out.push_back({prompt, chosen, std::move(rejected), sample.kind,
                     sample.goal_id, sample.dialog_id, sample.turn});
      if (policy == PairPolicy::kFirst) break;
    }
  }
  SortRecords(&out);
  return out;
}

nlohmann::ordered_json ToJson(const SftRecord &record) {
  nlohmann::ordered_json j;
  j["prompt"] = record.prompt;
  j["target"] = record.target;
  j["kind"] = KindName(record.kind);
  j["goal_id"] = record.goal_id;
  j["dialog_id"] = record.dialog_id;
  j["turn"] = record.turn;
  return j;
}

nlohmann::ordered_json ToJson(const PreferenceRecord &record) {
  nlohmann::ordered_json j;
  j["prompt"] = record.prompt;
  j["chosen"] = record.chosen;
  j["rejected"] = record.rejected;
  j["kind"] = KindName(record.kind);
  j["goal_id"] = record.goal_id;
  j["dialog_id"] = record.dialog_id;
  j["turn"] = record.turn;
  return j;
}

SftRecord SftRecordFromJson(const nlohmann::json &j) {
  try {
    return {j.at("prompt").get<std::string>(), j.at("target").get<std::string>(),
            ParseKind(j.at("kind").get<std::string>()),
            j.at("goal_id").get<std::string>(), j.at("dialog_id").get<std::string>(),
            j.at("turn").get<size_t>()};
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError(std::string("malformed SFT record: ") + e.what());
  }
}

PreferenceRecord PreferenceRecordFromJson(const nlohmann::json &j) {
  try {
    return {j.at("prompt").get<std::string>(), j.at("chosen").get<std::string>(),
            j.at("rejected").get<std::string>(),
            ParseKind(j.at("kind").get<std::string>()),
            j.at("goal_id").get<std::string>(), j.at("dialog_id").get<std::string>(),
            j.at("turn").get<size_t>()};
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError(std::string("malformed preference record: ") + e.what());
  }
}

void WriteJsonl(const std::filesystem::path &path,
                const std::vector<nlohmann::ordered_json> &lines) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  for (const auto &line : lines) out << line.dump() << '\n';
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<nlohmann::json> ReadJsonl(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open: " + path.string());
  std::vector<nlohmann::json> out;
  std::string line;
  size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(ParseJsonText(line, path.string() + ":" + std::to_string(number)));
  }
  return out;
}

}  // namespace subgoal
