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

#ifndef SUBGOAL_ITERATION_H_
#define SUBGOAL_ITERATION_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "subgoal/backend.h"
#include "subgoal/candidates.h"
#include "subgoal/corpus.h"
#include "subgoal/detector.h"
#include "subgoal/evaluator.h"
#include "subgoal/records.h"
#include "subgoal/sampler.h"

namespace subgoal {

enum class TrainMode { kSft, kDpo };

std::string_view TrainModeName(TrainMode mode);
// Accepts "sft" and "dpo"; throws ValidationError otherwise.
TrainMode ParseTrainMode(std::string_view name);

struct IterationConfig {
  int iteration = 0;
  // k, temperature, greedy inclusion and token budget. The sampling seed
  // is derived from `seed` and `iteration`.
  SamplingConfig sampling;
  double goal_fraction = 0.5;
  uint64_t seed = 0;
  TrainMode mode = TrainMode::kSft;
  PairPolicy pair_policy = PairPolicy::kFirst;
  int workers = 1;
  // Files are written here when non-empty.
  std::filesystem::path out_dir;
};

// Throws ValidationError for out-of-range fields.
void ValidateConfig(const IterationConfig &config);

struct SkippedGoal {
  std::string goal_id;
  std::string error;
};

struct IterationReport {
  int iteration = 0;
  int k = 0;
  double goal_fraction = 0;
  uint64_t seed = 0;
  TrainMode mode = TrainMode::kSft;
  PairPolicy pair_policy = PairPolicy::kFirst;
  size_t n_goals_sampled = 0;
  // Sampled goals minus the skipped ones.
  size_t n_goals_processed = 0;
  std::vector<SkippedGoal> skipped_goals;
  size_t n_dialogs_generated = 0;
  size_t n_dialogs_successful = 0;
  size_t n_dialogs_unsuccessful = 0;
  // Bucket i counts processed goals with exactly i successful candidates,
  // for i in 0..k*k+1.
  std::vector<size_t> successful_per_goal;
  size_t n_goals_with_subgoals = 0;
  size_t n_state_samples = 0;
  size_t n_act_response_samples = 0;
  size_t n_records = 0;
  size_t n_parse_diagnostics = 0;
  // Names relative to the output directory.
  std::vector<std::string> files;
  std::optional<EvalReport> dev_eval;
};

nlohmann::ordered_json ToJson(const IterationReport &report);
// Throws ValidationError on missing or mistyped keys.
IterationReport IterationReportFromJson(const nlohmann::json &j);

// Uniform sample without replacement of ceil(fraction * N) ids, returned
// sorted. Identical for identical inputs on every platform. Throws
// ValidationError unless 0 < fraction <= 1.
std::vector<std::string> SubsampleGoals(std::vector<std::string> ids,
                                        double fraction, uint64_t seed);

// Ground-truth dialog of every goal. Throws ValidationError if two dialogs
// share a goal id.
std::vector<std::pair<std::string, const Dialog *>> GoalDialogs(
    const Corpus &corpus);

// Sampling seed of one iteration.
SamplingConfig IterationSampling(const IterationConfig &config);

// Samples every turn of `source` and assembles the candidates (unlabeled).
// Throws BackendError.
CandidateGroup SampleGroup(GeneratorBackend &backend, const Corpus &corpus,
                           const Dialog &source, const SamplingConfig &sampling,
                           size_t *diagnostics);

struct GoalOutcome {
  std::string goal_id;
  // Set when the backend failed; the goal is then skipped.
  std::optional<std::string> error;
  CandidateGroup group;
  std::vector<SubgoalSample> samples;
  size_t diagnostics = 0;
};

struct IterationResult {
  IterationReport report;
  // Processed goals in goal id order.
  std::vector<GoalOutcome> outcomes;
  std::vector<SftRecord> sft;
  std::vector<PreferenceRecord> dpo;
};

// Samples the goal subset, assembles, labels and contrasts candidates,
// builds training records, evaluates `dev` greedily when given, and writes
// the records plus report.json to `config.out_dir`. Backend failures skip
// the goal; other errors propagate.
IterationResult RunIteration(const Corpus &train, GeneratorBackend &backend,
                             const IterationConfig &config,
                             const Corpus *dev = nullptr);

// Greedy generation over every turn of every dialog, with the ground-truth
// history as context, scored against the ground-truth responses.
EvalReport EvaluateGreedy(GeneratorBackend &backend, const Corpus &corpus,
                          const SamplingConfig &sampling, int workers,
                          size_t *diagnostics = nullptr);

// (iteration index, dev COMBINED) pairs with strictly increasing indices.
class LoopHistory {
 public:
  // Throws ValidationError if `iteration` does not exceed the last index.
  void Add(int iteration, double combined);
  const std::vector<std::pair<int, double>> &entries() const { return entries_; }

 private:
  std::vector<std::pair<int, double>> entries_;
};

// True iff the latest score does not improve on the previous one.
bool ShouldStop(const LoopHistory &history);

// Fixed-width table of a set of reports, sorted by iteration, followed by
// the stopping decision when dev scores are present.
std::string FormatStatsTable(std::vector<IterationReport> reports);

}  // namespace subgoal

#endif  // SUBGOAL_ITERATION_H_
