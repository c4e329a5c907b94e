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

#include "subgoal/cli.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>

#include "subgoal/candidates.h"
#include "subgoal/corpus.h"
#include "subgoal/detector.h"
#include "subgoal/errors.h"
#include "subgoal/evaluator.h"
#include "subgoal/http_backend.h"
#include "subgoal/iteration.h"
#include "subgoal/records.h"
#include "subgoal/scripted_backend.h"
#include "subgoal/synthetic.h"
#include "subgoal/text.h"
#include "subgoal/worker_pool.h"

namespace subgoal {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char *kEndpointEnv = "SUIT_BACKEND_URL";

struct BackendFlags {
  std::string kind = "scripted";
  std::string endpoint;
  int max_retries = 3;
  int max_in_flight = 4;
  double noise_rate = 0.0;
  std::string noise_types;
  bool diversify = false;
};

struct RunFlags {
  std::string corpus;
  std::string dev;
  std::string out;
  int k = 2;
  uint64_t seed = 0;
  double goal_fraction = 0.5;
  std::string mode = "sft";
  std::string pair_policy = "first";
  int iteration = 0;
  int workers = 1;
  double temperature = 1.0;
  int max_tokens = 256;
  bool no_greedy = false;
  BackendFlags backend;
};

void AddBackendOptions(CLI::App *cmd, BackendFlags *flags) {
  cmd->add_option("--backend", flags->kind, "Generator: scripted or http")
      ->check(CLI::IsMember({"scripted", "http"}));
  cmd->add_option("--endpoint", flags->endpoint,
                  "Completion URL for --backend http (overridden by SUIT_BACKEND_URL)");
  cmd->add_option("--max-retries", flags->max_retries, "HTTP retries per request")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-inflight", flags->max_in_flight,
                  "Concurrent HTTP requests")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--noise-rate", flags->noise_rate,
                  "Scripted backend: probability of corrupting a sampled generation")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--noise-types", flags->noise_types,
                  "Scripted backend: comma separated error types");
  cmd->add_flag("--diversify", flags->diversify,
                "Scripted backend: vary sampled generations without changing success");
}

void AddRunOptions(CLI::App *cmd, RunFlags *flags, bool with_mode) {
  cmd->add_option("--corpus", flags->corpus, "Training corpus JSON")->required();
  cmd->add_option("--out", flags->out, "Output directory")->required();
  cmd->add_option("--k", flags->k, "Samples per stage")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", flags->seed, "Random seed");
  cmd->add_option("--goal-fraction", flags->goal_fraction,
                  "Fraction of goals sampled per iteration");
  cmd->add_option("--iteration", flags->iteration, "Iteration index")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--workers", flags->workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--temperature", flags->temperature, "Sampling temperature");
  cmd->add_option("--max-tokens", flags->max_tokens, "Generation budget");
  cmd->add_flag("--no-greedy", flags->no_greedy,
                "Do not include greedy generations among the samples");
  if (with_mode) {
    cmd->add_option("--mode", flags->mode, "Training data format")
        ->check(CLI::IsMember({"sft", "dpo"}));
    cmd->add_option("--pair-policy", flags->pair_policy,
                    "Preference pairs per subgoal: first or all")
        ->check(CLI::IsMember({"first", "all"}));
  }
  AddBackendOptions(cmd, &flags->backend);
}

IterationConfig ToConfig(const RunFlags &flags) {
  IterationConfig config;
  config.iteration = flags.iteration;
  config.sampling.k = flags.k;
  config.sampling.temperature = flags.temperature;
  config.sampling.max_tokens = flags.max_tokens;
  config.sampling.include_greedy = !flags.no_greedy;
  config.goal_fraction = flags.goal_fraction;
  config.seed = flags.seed;
  config.mode = ParseTrainMode(flags.mode);
  config.pair_policy = ParsePairPolicy(flags.pair_policy);
  config.workers = flags.workers;
  config.out_dir = flags.out;
  ValidateConfig(config);
  return config;
}

std::vector<ErrorType> ParseErrorTypes(const std::string &list) {
  std::vector<ErrorType> out;
  std::string item;
  for (char c : list + ",") {
    if (c == ',') {
      std::string name(Trim(item));
      if (!name.empty()) out.push_back(ParseErrorType(name));
      item.clear();
    } else {
      item.push_back(c);
    }
  }
  return out;
}

// Scripted worlds answer for the training dialogs and, when given, the
// dev dialogs.
std::unique_ptr<GeneratorBackend> MakeBackend(const BackendFlags &flags,
                                              const Corpus &train,
                                              const Corpus *dev, uint64_t seed) {
  if (flags.kind == "http") {
    HttpBackendOptions options;
    options.endpoint = flags.endpoint;
    if (const char *env = std::getenv(kEndpointEnv); env != nullptr && *env != '\0') {
      options.endpoint = env;
    }
    if (options.endpoint.empty()) {
      throw ValidationError(std::string("--backend http needs --endpoint or ") +
                            kEndpointEnv);
    }
    options.max_retries = flags.max_retries;
    options.max_in_flight = flags.max_in_flight;
    return std::make_unique<HttpBackend>(options);
  }
  Corpus world = train;
  if (dev != nullptr) {
    for (const auto &dialog : dev->dialogs) {
      if (world.FindDialog(dialog.id) == nullptr) world.dialogs.push_back(dialog);
    }
    for (const auto &[id, goal] : dev->goals) world.goals.emplace(id, goal);
  }
  ErrorInjectionConfig noise;
  noise.random_rate = flags.noise_rate;
  if (!flags.noise_types.empty()) noise.random_types = ParseErrorTypes(flags.noise_types);
  return std::make_unique<ScriptedBackend>(std::move(world), std::move(noise), seed,
                                           flags.diversify);
}

void EnsureDirectory(const std::string &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
}

int CmdEvaluate(const std::string &corpus_path, const std::string &predictions_path,
                bool per_domain, std::ostream &out) {
  Corpus corpus = LoadCorpus(corpus_path);
  std::vector<Dialog> predictions = LoadDialogs(predictions_path);
  std::vector<std::vector<std::string>> references;
  for (const auto &dialog : predictions) {
    const Dialog *truth = corpus.FindDialog(dialog.id);
    if (truth == nullptr) {
      throw ValidationError("prediction " + dialog.id + " has no reference dialog");
    }
    std::vector<std::string> responses;
    for (const auto &turn : truth->turns) responses.push_back(turn.system.response);
    references.push_back(std::move(responses));
  }
  EvalReport report = EvaluateCorpus(predictions, corpus.goals, corpus.db, references);
  out << ToJson(report).dump(2) << '\n';
  if (per_domain) out << '\n' << FormatDomainTable(report);
  return kExitOk;
}

struct SampleOutcome {
  std::optional<CandidateGroup> group;
  std::string error;
};

int CmdSample(const RunFlags &flags, std::ostream &out, std::ostream &err) {
  IterationConfig config = ToConfig(flags);
  Corpus corpus = LoadCorpus(flags.corpus);
  auto backend = MakeBackend(flags.backend, corpus, nullptr, config.seed);
  const SamplingConfig sampling = IterationSampling(config);
  auto goal_dialogs = GoalDialogs(corpus);
  std::map<std::string, const Dialog *> by_goal(goal_dialogs.begin(), goal_dialogs.end());
  std::vector<std::string> ids;
  for (const auto &[id, dialog] : goal_dialogs) ids.push_back(id);
  auto chosen = SubsampleGoals(ids, config.goal_fraction,
                               MixSeed(config.seed, static_cast<uint64_t>(config.iteration)));
  std::vector<SampleOutcome> outcomes(chosen.size());
  ParallelFor(chosen.size(), config.workers, [&](size_t i) {
    try {
      CandidateGroup group =
          SampleGroup(*backend, corpus, *by_goal.at(chosen[i]), sampling, nullptr);
      LabelSuccess(&group, corpus.db);
      outcomes[i].group = std::move(group);
    } catch (const BackendError &e) {
      outcomes[i].error = e.what();
    }
  });
  EnsureDirectory(flags.out);
  std::vector<ordered_json> lines;
  size_t candidates = 0, successful = 0, skipped = 0;
  for (size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].group) {
      ++skipped;
      err << "skipped goal " << chosen[i] << ": " << outcomes[i].error << '\n';
      continue;
    }
    candidates += outcomes[i].group->candidates.size();
    successful += outcomes[i].group->successful();
    lines.push_back(CandidateGroupToJson(*outcomes[i].group));
  }
  WriteJsonl(std::filesystem::path(flags.out) / "candidates.jsonl", lines);
  ordered_json summary;
  summary["n_goals_sampled"] = chosen.size();
  summary["n_goals_processed"] = chosen.size() - skipped;
  summary["n_dialogs_generated"] = candidates;
  summary["n_dialogs_successful"] = successful;
  summary["n_dialogs_unsuccessful"] = candidates - successful;
  out << summary.dump(2) << '\n';
  return !chosen.empty() && skipped == chosen.size() ? kExitBackend : kExitOk;
}

int CmdDetect(const std::string &corpus_path, const std::string &candidates_path,
              const std::string &out_dir, const std::string &mode_name,
              const std::string &policy_name, int workers, std::ostream &out) {
  TrainMode mode = ParseTrainMode(mode_name);
  PairPolicy policy = ParsePairPolicy(policy_name);
  Corpus corpus = LoadCorpus(corpus_path);
  std::vector<nlohmann::json> lines = ReadJsonl(candidates_path);
  std::vector<std::vector<SubgoalSample>> found(lines.size());
  std::vector<CandidateGroup> groups;
  groups.reserve(lines.size());
  for (const auto &line : lines) groups.push_back(CandidateGroupFromJson(line, corpus));
  ParallelFor(groups.size(), workers, [&](size_t i) {
    LabelSuccess(&groups[i], corpus.db);
    found[i] = DetectSubgoals(groups[i], corpus.db);
  });
  std::vector<SubgoalSample> samples;
  size_t state = 0;
  for (auto &group_samples : found) {
    for (auto &sample : group_samples) {
      if (sample.kind == SubgoalKind::kState) ++state;
      samples.push_back(std::move(sample));
    }
  }
  EnsureDirectory(out_dir);
  const std::filesystem::path dir(out_dir);
  size_t records = 0;
  std::error_code ec;
  if (mode == TrainMode::kSft) {
    auto sft = EmitSft(samples);
    records = sft.size();
    std::filesystem::remove(dir / "dpo.jsonl", ec);
    WriteRecords(dir / "sft.jsonl", sft);
  } else {
    auto dpo = EmitDpo(samples, policy);
    records = dpo.size();
    std::filesystem::remove(dir / "sft.jsonl", ec);
    WriteRecords(dir / "dpo.jsonl", dpo);
  }
  ordered_json summary;
  summary["n_groups"] = groups.size();
  summary["n_subgoal_samples"] = {{"state", state},
                                  {"act_response", samples.size() - state},
                                  {"total", samples.size()}};
  summary["n_records"] = records;
  out << summary.dump(2) << '\n';
  return kExitOk;
}

int CmdIterate(const RunFlags &flags, std::ostream &out, std::ostream &err) {
  IterationConfig config = ToConfig(flags);
  Corpus corpus = LoadCorpus(flags.corpus);
  std::optional<Corpus> dev;
  if (!flags.dev.empty()) dev = LoadCorpus(flags.dev);
  auto backend = MakeBackend(flags.backend, corpus, dev ? &*dev : nullptr, config.seed);
  IterationResult result = RunIteration(corpus, *backend, config, dev ? &*dev : nullptr);
  const IterationReport &report = result.report;
  for (const auto &skip : report.skipped_goals) {
    err << "skipped goal " << skip.goal_id << ": " << skip.error << '\n';
  }
  out << FormatStatsTable({report});
  if (report.n_goals_sampled > 0 && report.n_goals_processed == 0) return kExitBackend;
  return kExitOk;
}

int CmdStats(const std::vector<std::string> &paths, std::ostream &out) {
  std::vector<IterationReport> reports;
  for (const auto &path : paths) {
    if (!std::filesystem::exists(path)) throw ValidationError("missing report: " + path);
    reports.push_back(IterationReportFromJson(ReadJsonFile(path)));
  }
  out << FormatStatsTable(std::move(reports));
  return kExitOk;
}

int CmdSynth(const SyntheticOptions &options, const std::string &path, std::ostream &out) {
  Corpus corpus = SyntheticCorpus(options);
  std::filesystem::path target(path);
  if (target.has_parent_path()) EnsureDirectory(target.parent_path().string());
  SaveCorpus(corpus, target);
  out << "wrote " << corpus.dialogs.size() << " dialogs to " << path << '\n';
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app("Subgoal mining for task-oriented dialog self-training", "subgoal");
  app.require_subcommand(1);

  std::string eval_corpus, eval_predictions;
  bool per_domain = false;
  auto *evaluate = app.add_subcommand("evaluate", "Score predicted dialogs");
  evaluate->add_option("--corpus", eval_corpus, "Reference corpus JSON")->required();
  evaluate->add_option("--predictions", eval_predictions, "Predicted dialogs JSON")
      ->required();
  evaluate->add_flag("--per-domain", per_domain, "Also print the per-domain table");

  RunFlags sample_flags;
  auto *sample = app.add_subcommand("sample", "Generate and label candidate dialogs");
  AddRunOptions(sample, &sample_flags, false);

  std::string detect_corpus, detect_candidates, detect_out, detect_mode = "sft",
                                                            detect_policy = "first";
  int detect_workers = 1;
  auto *detect = app.add_subcommand("detect", "Find subgoals in labeled candidates");
  detect->add_option("--corpus", detect_corpus, "Training corpus JSON")->required();
  detect->add_option("--candidates", detect_candidates, "candidates.jsonl")->required();
  detect->add_option("--out", detect_out, "Output directory")->required();
  detect->add_option("--mode", detect_mode, "Training data format")
      ->check(CLI::IsMember({"sft", "dpo"}));
  detect->add_option("--pair-policy", detect_policy, "first or all")
      ->check(CLI::IsMember({"first", "all"}));
  detect->add_option("--workers", detect_workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  RunFlags iterate_flags;
  auto *iterate = app.add_subcommand("iterate", "Run one self-training data iteration");
  AddRunOptions(iterate, &iterate_flags, true);
  iterate->add_option("--dev", iterate_flags.dev, "Dev corpus for greedy evaluation");

  std::vector<std::string> report_paths;
  auto *stats = app.add_subcommand("stats", "Tabulate iteration reports");
  stats->add_option("--report", report_paths, "report.json files")->required();

  SyntheticOptions synth_options;
  std::string synth_out;
  auto *synth = app.add_subcommand("synth", "Write a synthetic corpus");
  synth->add_option("--dialogs", synth_options.dialogs, "Number of dialogs");
  synth->add_option("--seed", synth_options.seed, "Random seed");
  synth->add_option("--max-domains", synth_options.max_domains, "Domains per goal")
      ->check(CLI::Range(1, 2));
  synth->add_option("--prefix", synth_options.id_prefix, "Dialog id prefix");
  synth->add_option("--out", synth_out, "Corpus JSON path")->required();

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*evaluate) return CmdEvaluate(eval_corpus, eval_predictions, per_domain, out);
    if (*sample) return CmdSample(sample_flags, out, err);
    if (*detect) {
      return CmdDetect(detect_corpus, detect_candidates, detect_out, detect_mode,
                       detect_policy, detect_workers, out);
    }
    if (*iterate) return CmdIterate(iterate_flags, out, err);
    if (*stats) return CmdStats(report_paths, out);
    if (*synth) return CmdSynth(synth_options, synth_out, out);
  } catch (const BackendError &e) {
    err << "backend failure (" << BackendErrorKindName(e.kind()) << ") at "
        << e.prompt_id() << " after " << e.retries() << " retries: " << e.what() << '\n';
    return kExitBackend;
  } catch (const IoError &e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error &e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace subgoal
