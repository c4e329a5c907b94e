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

#include "subgoal/iteration.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "subgoal/dialog.h"
#include "subgoal/errors.h"
#include "subgoal/text.h"
#include "subgoal/worker_pool.h"

namespace subgoal {

namespace {

using ordered_json = nlohmann::ordered_json;

void WriteText(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

EvalReport EvalReportFromJson(const nlohmann::json &j) {
  EvalReport report;
  report.bleu = j.at("bleu").get<double>();
  report.inform_rate = j.at("inform").get<double>();
  report.success_rate = j.at("success").get<double>();
  report.combined = j.at("combined").get<double>();
  report.dialogs = j.at("dialogs").get<size_t>();
  if (j.contains("per_domain")) {
    for (const auto &[domain, rates] : j.at("per_domain").items()) {
      report.per_domain[domain] = {rates.at("inform").get<double>(),
                                   rates.at("success").get<double>(),
                                   rates.at("dialogs").get<size_t>()};
    }
  }
  return report;
}

}  // namespace

std::string_view TrainModeName(TrainMode mode) {
  return mode == TrainMode::kSft ? "sft" : "dpo";
}

TrainMode ParseTrainMode(std::string_view name) {
  if (name == "sft") return TrainMode::kSft;
  if (name == "dpo") return TrainMode::kDpo;
  throw ValidationError("unknown train mode: " + std::string(name));
}

void ValidateConfig(const IterationConfig &config) {
  if (!(config.goal_fraction > 0 && config.goal_fraction <= 1)) {
    throw ValidationError("goal fraction must be in (0, 1]");
  }
  if (config.sampling.k < 1) throw ValidationError("k must be at least 1");
  if (!(config.sampling.temperature > 0)) {
    throw ValidationError("temperature must be positive");
  }
  if (config.sampling.max_tokens < 1) {
    throw ValidationError("max tokens must be positive");
  }
  if (config.workers < 1) throw ValidationError("workers must be at least 1");
  if (config.iteration < 0) throw ValidationError("iteration must be >= 0");
}

ordered_json ToJson(const IterationReport &report) {
  ordered_json j;
  j["iteration"] = report.iteration;
  j["k"] = report.k;
  j["goal_fraction"] = report.goal_fraction;
  j["seed"] = report.seed;
  j["mode"] = TrainModeName(report.mode);
  j["pair_policy"] = PairPolicyName(report.pair_policy);
  j["n_goals_sampled"] = report.n_goals_sampled;
  j["n_goals_processed"] = report.n_goals_processed;
  j["skipped_goals"] = ordered_json::array();
  for (const auto &skip : report.skipped_goals) {
    j["skipped_goals"].push_back({{"goal_id", skip.goal_id}, {"error", skip.error}});
  }
  j["n_dialogs_generated"] = report.n_dialogs_generated;
  j["n_dialogs_successful"] = report.n_dialogs_successful;
  j["n_dialogs_unsuccessful"] = report.n_dialogs_unsuccessful;
  j["successful_per_goal"] = report.successful_per_goal;
  j["n_goals_with_subgoals"] = report.n_goals_with_subgoals;
  ordered_json samples;
  samples["state"] = report.n_state_samples;
  samples["act_response"] = report.n_act_response_samples;
  samples["total"] = report.n_state_samples + report.n_act_response_samples;
  j["n_subgoal_samples"] = std::move(samples);
  j["n_records"] = report.n_records;
  j["n_parse_diagnostics"] = report.n_parse_diagnostics;
  j["files"] = report.files;
  j["dev_eval"] = report.dev_eval ? ToJson(*report.dev_eval) : ordered_json(nullptr);
  return j;
}

IterationReport IterationReportFromJson(const nlohmann::json &j) {
  try {
    IterationReport report;
    report.iteration = j.at("iteration").get<int>();
    report.k = j.at("k").get<int>();
    report.goal_fraction = j.at("goal_fraction").get<double>();
    report.seed = j.at("seed").get<uint64_t>();
    report.mode = ParseTrainMode(j.at("mode").get<std::string>());
    report.pair_policy = ParsePairPolicy(j.at("pair_policy").get<std::string>());
    report.n_goals_sampled = j.at("n_goals_sampled").get<size_t>();
    report.n_goals_processed = j.at("n_goals_processed").get<size_t>();
    for (const auto &skip : j.at("skipped_goals")) {
      report.skipped_goals.push_back({skip.at("goal_id").get<std::string>(),
                                      skip.at("error").get<std::string>()});
    }
    report.n_dialogs_generated = j.at("n_dialogs_generated").get<size_t>();
    report.n_dialogs_successful = j.at("n_dialogs_successful").get<size_t>();
    report.n_dialogs_unsuccessful = j.at("n_dialogs_unsuccessful").get<size_t>();
    report.successful_per_goal =
        j.at("successful_per_goal").get<std::vector<size_t>>();
    report.n_goals_with_subgoals = j.at("n_goals_with_subgoals").get<size_t>();
    const auto &samples = j.at("n_subgoal_samples");
    report.n_state_samples = samples.at("state").get<size_t>();
    report.n_act_response_samples = samples.at("act_response").get<size_t>();
    report.n_records = j.at("n_records").get<size_t>();
    report.n_parse_diagnostics = j.value("n_parse_diagnostics", size_t{0});
    report.files = j.at("files").get<std::vector<std::string>>();
    if (j.contains("dev_eval") && !j.at("dev_eval").is_null()) {
      report.dev_eval = EvalReportFromJson(j.at("dev_eval"));
    }
    return report;
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError(std::string("malformed iteration report: ") + e.what());
  }
}

std::vector<std::string> SubsampleGoals(std::vector<std::string> ids,
                                        double fraction, uint64_t seed) {
  if (!(fraction > 0 && fraction <= 1)) {
    throw ValidationError("goal fraction must be in (0, 1]");
  }
  std::sort(ids.begin(), ids.end());
  const size_t n = ids.size();
  // The small slack keeps products like 0.1 * 30 from rounding up.
  size_t take = std::min(
      n, static_cast<size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9)));
  std::mt19937_64 rng(seed);
  for (size_t i = 0; i < take; ++i) {
    size_t j = i + static_cast<size_t>(UniformBelow(rng, n - i));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(take);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::pair<std::string, const Dialog *>> GoalDialogs(
    const Corpus &corpus) {
  std::map<std::string, const Dialog *> by_goal;
  for (const auto &dialog : corpus.dialogs) {
    auto [it, inserted] = by_goal.emplace(dialog.goal_id, &dialog);
    if (!inserted) {
      throw ValidationError("goal " + dialog.goal_id + " has two dialogs: " +
                            it->second->id + " and " + dialog.id);
    }
  }
  return {by_goal.begin(), by_goal.end()};
}

SamplingConfig IterationSampling(const IterationConfig &config) {
  SamplingConfig sampling = config.sampling;
  sampling.seed = MixSeed(config.seed, static_cast<uint64_t>(config.iteration));
  return sampling;
}

CandidateGroup SampleGroup(GeneratorBackend &backend, const Corpus &corpus,
                           const Dialog &source, const SamplingConfig &sampling,
                           size_t *diagnostics) {
  auto goal = corpus.goals.find(source.goal_id);
  if (goal == corpus.goals.end()) throw MissingGoal(source.goal_id);
  std::vector<SampledTurnSet> sets;
  sets.reserve(source.turns.size());
  for (size_t t = 0; t < source.turns.size(); ++t) {
    sets.push_back(SampleTurn(backend, ContextAt(source, t), sampling));
    if (diagnostics != nullptr) *diagnostics += sets.back().diagnostics.size();
  }
  CandidateGroup group;
  group.goal_id = source.goal_id;
  group.goal = goal->second;
  group.source = source;
  group.candidates = AssembleCandidates(source, sets, sampling.k);
  return group;
}

IterationResult RunIteration(const Corpus &train, GeneratorBackend &backend,
                             const IterationConfig &config, const Corpus *dev) {
  ValidateConfig(config);
  const SamplingConfig sampling = IterationSampling(config);
  auto goal_dialogs = GoalDialogs(train);
  std::map<std::string, const Dialog *> by_goal(goal_dialogs.begin(),
                                                goal_dialogs.end());
  std::vector<std::string> ids;
  ids.reserve(goal_dialogs.size());
  for (const auto &[id, dialog] : goal_dialogs) ids.push_back(id);
  const std::vector<std::string> chosen = SubsampleGoals(
      ids, config.goal_fraction,
      MixSeed(config.seed, static_cast<uint64_t>(config.iteration)));

  std::vector<GoalOutcome> outcomes(chosen.size());
  ParallelFor(chosen.size(), config.workers, [&](size_t i) {
    GoalOutcome &outcome = outcomes[i];
    outcome.goal_id = chosen[i];
    try {
      outcome.group = SampleGroup(backend, train, *by_goal.at(chosen[i]),
                                  sampling, &outcome.diagnostics);
    } catch (const BackendError &e) {
      outcome.error = std::string(BackendErrorKindName(e.kind())) + " at " +
                      e.prompt_id() + ": " + e.what();
      return;
    }
    LabelSuccess(&outcome.group, train.db);
    outcome.samples = DetectSubgoals(outcome.group, train.db);
  });

  IterationResult result;
  IterationReport &report = result.report;
  report.iteration = config.iteration;
  report.k = config.sampling.k;
  report.goal_fraction = config.goal_fraction;
  report.seed = config.seed;
  report.mode = config.mode;
  report.pair_policy = config.pair_policy;
  report.n_goals_sampled = chosen.size();
  report.successful_per_goal.assign(
      static_cast<size_t>(config.sampling.k * config.sampling.k + 2), 0);
  std::vector<SubgoalSample> samples;
  for (auto &outcome : outcomes) {
    report.n_parse_diagnostics += outcome.diagnostics;
    if (outcome.error) {
      report.skipped_goals.push_back({outcome.goal_id, *outcome.error});
      continue;
    }
    ++report.n_goals_processed;
    const size_t total = outcome.group.candidates.size();
    const size_t ok = outcome.group.successful();
    report.n_dialogs_generated += total;
    report.n_dialogs_successful += ok;
    report.n_dialogs_unsuccessful += total - ok;
    ++report.successful_per_goal[std::min(ok, report.successful_per_goal.size() - 1)];
    if (!outcome.samples.empty()) ++report.n_goals_with_subgoals;
    for (const auto &sample : outcome.samples) {
      if (sample.kind == SubgoalKind::kState) {
        ++report.n_state_samples;
      } else {
        ++report.n_act_response_samples;
      }
      samples.push_back(sample);
    }
    result.outcomes.push_back(std::move(outcome));
  }

  const std::string records_file =
      config.mode == TrainMode::kSft ? "sft.jsonl" : "dpo.jsonl";
  if (config.mode == TrainMode::kSft) {
    result.sft = EmitSft(samples);
    report.n_records = result.sft.size();
  } else {
    result.dpo = EmitDpo(samples, config.pair_policy);
    report.n_records = result.dpo.size();
  }

  if (dev != nullptr) {
    report.dev_eval = EvaluateGreedy(backend, *dev, sampling, config.workers,
                                     &report.n_parse_diagnostics);
  }

  if (!config.out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) {
      throw IoError("cannot create output directory " + config.out_dir.string() +
                  ": " + ec.message());
    }
    const char *other = config.mode == TrainMode::kSft ? "dpo.jsonl" : "sft.jsonl";
    std::filesystem::remove(config.out_dir / other, ec);
    if (config.mode == TrainMode::kSft) {
      WriteRecords(config.out_dir / records_file, result.sft);
    } else {
      WriteRecords(config.out_dir / records_file, result.dpo);
    }
    report.files = {records_file, "report.json"};
    WriteText(config.out_dir / "report.json", ToJson(report).dump(2) + "\n");
  }
  return result;
}

EvalReport EvaluateGreedy(GeneratorBackend &backend, const Corpus &corpus,
                          const SamplingConfig &sampling, int workers,
                          size_t *diagnostics) {
  std::vector<Dialog> predicted(corpus.dialogs.size());
  std::vector<std::vector<std::string>> references(corpus.dialogs.size());
  std::vector<std::vector<std::string>> notes(corpus.dialogs.size());
  ParallelFor(corpus.dialogs.size(), workers, [&](size_t i) {
    const Dialog &source = corpus.dialogs[i];
    Dialog &dialog = predicted[i];
    dialog = source;
    for (size_t t = 0; t < source.turns.size(); ++t) {
      dialog.turns[t].system =
          GreedyTurn(backend, ContextAt(source, t), sampling, &notes[i]);
      references[i].push_back(source.turns[t].system.response);
    }
  });
  if (diagnostics != nullptr) {
    for (const auto &n : notes) *diagnostics += n.size();
  }
  return EvaluateCorpus(predicted, corpus.goals, corpus.db, references);
}

void LoopHistory::Add(int iteration, double combined) {
  if (!entries_.empty() && iteration <= entries_.back().first) {
    throw ValidationError("iteration indices must increase: " +
                          std::to_string(iteration) + " after " +
                          std::to_string(entries_.back().first));
  }
  entries_.emplace_back(iteration, combined);
}

bool ShouldStop(const LoopHistory &history) {
  const auto &e = history.entries();
  if (e.size() < 2) return false;
  return e.back().second <= e[e.size() - 2].second;
}

std::string FormatStatsTable(std::vector<IterationReport> reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const IterationReport &a, const IterationReport &b) {
                     return a.iteration < b.iteration;
                   });
  size_t buckets = 0;
  for (const auto &r : reports) {
    buckets = std::max(buckets, r.successful_per_goal.size());
  }
  std::ostringstream out;
  char cell[64];
  auto put = [&](const char *fmt, auto value) {
    std::snprintf(cell, sizeof(cell), fmt, value);
    out << cell;
  };
  put("%5s", "iter");
  put("%7s", "mode");
  put("%8s", "goals");
  put("%9s", "dialogs");
  put("%9s", "success");
  put("%9s", "failure");
  for (size_t b = 0; b < buckets; ++b) {
    put("%7s", ("s=" + std::to_string(b)).c_str());
  }
  put("%8s", "state");
  put("%8s", "act_rsp");
  put("%8s", "total");
  put("%10s", "combined");
  out << '\n';
  LoopHistory history;
  bool scored = true;
  for (const auto &r : reports) {
    put("%5d", r.iteration);
    put("%7s", std::string(TrainModeName(r.mode)).c_str());
    put("%8zu", r.n_goals_processed);
    put("%9zu", r.n_dialogs_generated);
    put("%9zu", r.n_dialogs_successful);
    put("%9zu", r.n_dialogs_unsuccessful);
    for (size_t b = 0; b < buckets; ++b) {
      if (b < r.successful_per_goal.size()) {
        put("%7zu", r.successful_per_goal[b]);
      } else {
        put("%7s", "-");
      }
    }
    put("%8zu", r.n_state_samples);
    put("%8zu", r.n_act_response_samples);
    put("%8zu", r.n_state_samples + r.n_act_response_samples);
    if (r.dev_eval) {
      put("%10.2f", r.dev_eval->combined);
    } else {
      put("%10s", "-");
      scored = false;
    }
    out << '\n';
    if (scored && r.dev_eval) {
      try {
        history.Add(r.iteration, r.dev_eval->combined);
      } catch (const ValidationError &) {
        scored = false;
      }
    }
  }
  if (scored && !history.entries().empty()) {
    if (history.entries().size() == 1) {
      out << "continue: no earlier combined score\n";
    } else {
      out << (ShouldStop(history) ? "stop: combined score did not improve\n"
                                  : "continue: combined score improved\n");
    }
  } else {
    out << "stop decision: unavailable without dev scores\n";
  }
  return out.str();
}

}  // namespace subgoal
