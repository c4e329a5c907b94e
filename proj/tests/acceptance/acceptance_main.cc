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

// Exit gate: one PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/fixtures.h"
#include "support/oracles.h"
#include "subgoal/bleu.h"
#include "subgoal/candidates.h"
#include "subgoal/cli.h"
#include "subgoal/detector.h"
#include "subgoal/dialog.h"
#include "subgoal/evaluator.h"
#include "subgoal/iteration.h"
#include "subgoal/prompt.h"
#include "subgoal/records.h"
#include "subgoal/scripted_backend.h"
#include "subgoal/synthetic.h"
#include "subgoal/text.h"
#include "subgoal/verbalize.h"

namespace subgoal {
namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Format(const char *fmt, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer), fmt, args...);
  return buffer;
}

// 1. Combined score of every published results row.
Verdict CombinedRows() {
  struct Row {
    const char *name;
    double bleu, inform, success, published;
    int decimals;
  };
  const Row rows[] = {
      {"baseline a", 19.90, 88.9, 78.0, 103.4, 1},
      {"baseline b", 19.00, 89.2, 80.3, 103.8, 1},
      {"baseline c", 17.50, 89.5, 84.2, 104.4, 1},
      {"initial sft", 19.94, 80.4, 72.5, 96.39, 2},
      {"all subgoals sft", 19.50, 87.0, 79.4, 102.70, 2},
      {"all subgoals dpo", 17.79, 86.9, 80.6, 101.54, 2},
      {"iter1 sft", 17.75, 89.8, 84.0, 104.65, 2},
      {"iter1 dpo", 17.44, 88.5, 82.7, 103.04, 2},
      {"iter2 sft-sft", 15.11, 89.7, 85.9, 102.91, 2},
      {"iter2 sft-dpo", 17.17, 89.5, 84.4, 104.12, 2},
      {"iter2 dpo-sft", 16.47, 90.0, 87.1, 105.02, 2},
      {"iter2 dpo-dpo", 16.92, 88.8, 84.4, 103.52, 2},
  };
  auto start = Clock::now();
  int matched = 0;
  std::string misses;
  for (const Row &row : rows) {
    double value = Combined(row.bleu, row.inform, row.success);
    // Rows are published at `decimals` places: round half up before comparing.
    double scale = std::pow(10.0, row.decimals);
    double rounded = std::floor(value * scale + 0.5 + 1e-9) / scale;
    if (std::abs(rounded - row.published) <= 0.01) {
      ++matched;
    } else {
      misses += Format(" %s=%.4f", row.name, value);
    }
  }
  double elapsed = Seconds(start);
  int n = static_cast<int>(std::size(rows));
  return {matched == n && elapsed < 1.0,
          Format("%d/%d rows within 0.01, %.3fs", matched, n, elapsed) + misses};
}

// Backend whose every generation differs from every other one.
class DistinctBackend : public GeneratorBackend {
 public:
  std::vector<std::string> Generate(const GenerationRequest &r) override {
    bool state = StatePromptPrefix(r.prompt).size() == r.prompt.size();
    uint64_t tag = Fnv1a64(r.prompt);
    std::vector<std::string> out;
    for (int i = 0; i < r.n; ++i) {
      int draw = r.greedy ? 0 : i + 1;
      out.push_back(state ? Format("[B] hotel stars: %d;", draw)
                          : Format("[A] hotel inform NAME; [R] [hotel_name] %d %llu .", draw,
                                   static_cast<unsigned long long>(tag % 1000)));
    }
    return out;
  }
};

// Checks that substituting each rejected fragment makes the dialog fail.
struct FlipCheck {
  size_t pairs = 0;
  size_t flips = 0;
};

void CheckPairs(const IterationResult &result, const Database &db, FlipCheck *check) {
  std::map<std::string, const GoalOutcome *> by_goal;
  for (const auto &o : result.outcomes) by_goal[o.goal_id] = &o;
  for (const auto &pair : result.dpo) {
    ++check->pairs;
    const GoalOutcome *outcome = by_goal.at(pair.goal_id);
    const Candidate *chosen = nullptr;
    for (const auto &c : outcome->group.candidates) {
      if (c.id == pair.dialog_id) chosen = &c;
    }
    if (chosen == nullptr || !DialogSuccess(chosen->dialog, outcome->group.goal, db)) continue;
    SystemTurn fragment;
    if (pair.kind == SubgoalKind::kState) {
      fragment.state = ParseState(pair.rejected).state;
    } else {
      auto parsed = ParseActResponse(pair.rejected);
      fragment.acts = parsed.acts;
      fragment.response = parsed.response;
    }
    Dialog flipped = ReplaceTurn(chosen->dialog, pair.turn, pair.kind, fragment);
    if (!DialogSuccess(flipped, outcome->group.goal, db)) ++check->flips;
  }
}

Corpus Synthetic(size_t dialogs, uint64_t seed, const std::string &prefix = "syn") {
  SyntheticOptions options;
  options.dialogs = dialogs;
  options.seed = seed;
  options.id_prefix = prefix;
  return SyntheticCorpus(options);
}

// 2. Candidate counts, per goal and over a 4218-goal run. The run also
// feeds criterion 4.
Verdict CandidateAccounting(FlipCheck *flips) {
  auto start = Clock::now();
  Corpus small = Synthetic(40, 3);
  DistinctBackend distinct;
  SamplingConfig sampling;
  sampling.k = 2;
  size_t exact = 0;
  for (const auto &dialog : small.dialogs) {
    if (SampleGroup(distinct, small, dialog, sampling, nullptr).candidates.size() == 5) ++exact;
  }

  Corpus corpus = Synthetic(8436, 7);
  ErrorInjectionConfig noise;
  noise.random_rate = 0.3;
  noise.random_types = {ErrorType::kWrongValue, ErrorType::kSwapDepartureDestination,
                        ErrorType::kOmitRequestedSlot};
  ScriptedBackend backend(corpus, noise, 11, true);
  IterationConfig config;
  config.sampling.k = 2;
  config.goal_fraction = 0.5;
  config.seed = 5;
  config.mode = TrainMode::kDpo;
  config.pair_policy = PairPolicy::kAll;
  IterationResult result = RunIteration(corpus, backend, config);
  const auto &r = result.report;
  CheckPairs(result, corpus.db, flips);
  double elapsed = Seconds(start);
  bool ok = exact == small.dialogs.size() && r.n_goals_processed == 4218 &&
            r.n_dialogs_generated == 21090 &&
            r.n_dialogs_successful + r.n_dialogs_unsuccessful == 21090 &&
            7720 + 13370 == 21090 && elapsed < 120.0;
  return {ok, Format("%zu/%zu goals with 5 candidates; %zu goals, %zu dialogs = %zu successful + "
                     "%zu unsuccessful, %.1fs",
                     exact, small.dialogs.size(), r.n_goals_processed, r.n_dialogs_generated,
                     r.n_dialogs_successful, r.n_dialogs_unsuccessful, elapsed)};
}

testing::OracleWorld WorldOf(const Database &db) {
  testing::OracleWorld world;
  world.ontology = db.ontology();
  for (const auto &[domain, schema] : db.ontology().domains()) {
    if (schema.entity_bearing) world.tables[domain] = db.Table(domain);
  }
  return world;
}

// Random candidate group built from a ground-truth dialog.
CandidateGroup RandomGroup(const Corpus &corpus, const std::vector<const Dialog *> &pool,
                           std::mt19937_64 &rng) {
  const Dialog &source = *pool[UniformBelow(rng, pool.size())];
  CandidateGroup group;
  group.goal_id = source.goal_id;
  group.goal = corpus.goals.at(source.goal_id);
  group.source = source;
  const ErrorType types[] = {ErrorType::kDropSlot, ErrorType::kWrongValue,
                             ErrorType::kSwapDepartureDestination,
                             ErrorType::kOmitRequestedSlot};
  size_t n = 1 + UniformBelow(rng, 5);
  for (size_t i = 0; i < n; ++i) {
    Dialog d = source;
    d.id = CandidateId(source.id, static_cast<int>(i));
    size_t edits = UniformBelow(rng, 4);
    for (size_t e = 0; e < edits; ++e) {
      size_t t = UniformBelow(rng, d.turns.size());
      SystemTurn &turn = d.turns[t].system;
      switch (UniformBelow(rng, 4)) {
        case 0:
          turn.response += " anything else ?";
          break;
        case 1: {
          if (turn.state.empty()) break;
          const auto &domain = turn.state.domains.begin()->first;
          turn.state.Set(domain, "bookday", "monday");
          break;
        }
        default:
          ApplyError(types[UniformBelow(rng, 4)], group.goal, corpus.db, rng(), &turn);
      }
    }
    Candidate c;
    c.id = d.id;
    c.index = static_cast<int>(i);
    c.dialog = std::move(d);
    group.candidates.push_back(std::move(c));
  }
  LabelSuccess(&group, corpus.db);
  return group;
}

// 3. Detection equals the exhaustive oracle on random groups.
Verdict OracleEquivalence(FlipCheck *flips) {
  auto start = Clock::now();
  Corpus corpus = Synthetic(400, 13);
  std::vector<const Dialog *> pool;
  for (const auto &d : corpus.dialogs) {
    if (d.turns.size() <= 6) pool.push_back(&d);
  }
  testing::OracleWorld world = WorldOf(corpus.db);
  std::mt19937_64 rng(2024);
  const size_t kGroups = 2000;
  size_t mismatches = 0, label_mismatches = 0, with_subgoals = 0;
  for (size_t g = 0; g < kGroups; ++g) {
    CandidateGroup group = RandomGroup(corpus, pool, rng);
    for (const auto &c : group.candidates) {
      if (c.success != testing::OracleDialogSuccess(c.dialog, group.goal, world)) {
        ++label_mismatches;
      }
    }
    auto samples = DetectSubgoals(group, corpus.db);
    testing::SiteMap got;
    for (const auto &sample : samples) {
      int kind = sample.kind == SubgoalKind::kState ? 0 : 1;
      auto &texts = got[{sample.dialog_id, sample.turn, kind}];
      for (const auto &negative : sample.negatives) {
        if (!texts.insert(testing::OracleFragmentText(negative, kind)).second) ++mismatches;
      }
    }
    if (got != testing::OracleDetect(group, world)) ++mismatches;
    if (!samples.empty()) ++with_subgoals;

    IterationResult wrapped;
    GoalOutcome outcome;
    outcome.goal_id = group.goal_id;
    outcome.group = group;
    wrapped.outcomes.push_back(std::move(outcome));
    wrapped.dpo = EmitDpo(samples, PairPolicy::kAll);
    CheckPairs(wrapped, corpus.db, flips);
  }
  double elapsed = Seconds(start);
  return {mismatches == 0 && label_mismatches == 0 && pool.size() > 100 &&
              with_subgoals >= 300 && elapsed < 300.0,
          Format("%zu groups (%zu with subgoals), %zu mismatches, %zu label mismatches, %.1fs",
                 kGroups, with_subgoals, mismatches, label_mismatches, elapsed)};
}

// 4. Every preference pair from criteria 2 and 3 flips its dialog.
Verdict FlipSoundness(const FlipCheck &check) {
  return {check.pairs > 0 && check.flips == check.pairs,
          Format("%zu/%zu pairs re-evaluate to unsuccessful", check.flips, check.pairs)};
}

// 5. One planted critical error per case is found at exactly its site.
Verdict ErrorSiteRecovery() {
  Corpus corpus = Synthetic(300, 21);
  std::mt19937_64 rng(77);
  const uint64_t kSeed = 31;
  const ErrorType types[] = {ErrorType::kWrongValue, ErrorType::kSwapDepartureDestination,
                             ErrorType::kOmitRequestedSlot};
  using Site = std::tuple<size_t, size_t, SubgoalKind>;
  std::set<Site> expected, found;
  size_t planted = 0, homogeneous = 0, homogeneous_hits = 0;
  std::map<ErrorType, size_t> by_type;
  for (size_t c = 0; c < 200; ++c) {
    const Dialog &dialog = corpus.dialogs[UniformBelow(rng, corpus.dialogs.size())];
    const UserGoal &goal = corpus.goals.at(dialog.goal_id);
    Corpus world;
    world.db = corpus.db;
    world.dialogs = {dialog};
    world.goals.emplace(goal.id, goal);
    ErrorInjectionConfig noise;
    SamplingConfig sampling;
    sampling.k = 2;
    sampling.seed = c;
    bool diversify = false;
    const int mode = c % 10;  // 0: all succeed, 1: all fail, else one planted error
    if (mode == 0) {
      diversify = true;
    } else {
      // Sites whose corruption (as the backend will render it for draw 2)
      // makes the ground truth fail.
      std::vector<std::pair<size_t, ErrorType>> sites;
      for (size_t t = 0; t < dialog.turns.size(); ++t) {
        for (ErrorType type : types) {
          SystemTurn turn = dialog.turns[t].system;
          if (!ApplyError(type, goal, corpus.db, MixSeed(kSeed, 2), &turn)) continue;
          if (mode == 1) {
            SystemTurn other = dialog.turns[t].system;
            ApplyError(type, goal, corpus.db, MixSeed(kSeed, 1), &other);
            if (DialogSuccess(ReplaceTurn(dialog, t, ErrorStage(type), other), goal, corpus.db)) {
              continue;
            }
          }
          if (!DialogSuccess(ReplaceTurn(dialog, t, ErrorStage(type), turn), goal, corpus.db)) {
            sites.emplace_back(t, type);
          }
        }
      }
      if (sites.empty()) return {false, "no critical site in dialog " + dialog.id};
      auto [turn, type] = sites[UniformBelow(rng, sites.size())];
      if (mode == 1) {
        noise.sites.push_back({dialog.id, turn, type, {}});
        sampling.include_greedy = false;
      } else {
        noise.sites.push_back({dialog.id, turn, type, {2}});
        expected.emplace(c, turn, ErrorStage(type));
        ++planted;
        ++by_type[type];
      }
    }
    ScriptedBackend backend(world, noise, kSeed, diversify);
    CandidateGroup group = SampleGroup(backend, world, dialog, sampling, nullptr);
    LabelSuccess(&group, corpus.db);
    auto samples = DetectSubgoals(group, corpus.db);
    if (mode <= 1) {
      ++homogeneous;
      homogeneous_hits += samples.size();
    }
    for (const auto &s : samples) found.emplace(c, s.turn, s.kind);
  }
  size_t hits = 0;
  for (const auto &site : found) hits += expected.count(site);
  double precision = found.empty() ? 0.0 : static_cast<double>(hits) / found.size();
  double recall = expected.empty() ? 0.0 : static_cast<double>(hits) / expected.size();
  return {precision == 1.0 && recall == 1.0 && homogeneous_hits == 0 &&
              by_type[ErrorType::kSwapDepartureDestination] > 0 &&
              by_type[ErrorType::kOmitRequestedSlot] > 0,
          Format("200 cases (%zu planted, %zu homogeneous), precision %.3f, recall %.3f, "
                 "%zu homogeneous detections; planted wrong_value %zu, swap %zu, omit %zu",
                 planted, homogeneous, precision, recall, homogeneous_hits,
                 by_type[ErrorType::kWrongValue], by_type[ErrorType::kSwapDepartureDestination],
                 by_type[ErrorType::kOmitRequestedSlot])};
}

// 6. Evaluator and BLEU properties.
Verdict EvaluatorProperties() {
  Corpus corpus = Synthetic(300, 5);
  std::mt19937_64 rng(6);
  size_t cases = 0, flipped = 0;
  for (size_t attempt = 0; cases < 100 && attempt < 10000; ++attempt) {
    const Dialog &d = corpus.dialogs[UniformBelow(rng, corpus.dialogs.size())];
    const UserGoal &goal = corpus.goals.at(d.goal_id);
    std::vector<std::string> placeholders;
    for (const auto &[domain, dg] : goal.domains) {
      for (const auto &slot : dg.requests) placeholders.push_back(Placeholder(domain, slot));
    }
    if (placeholders.empty() || !DialogSuccess(d, goal, corpus.db)) continue;
    const std::string target = placeholders[UniformBelow(rng, placeholders.size())];
    Dialog edited = d;
    for (auto &turn : edited.turns) {
      std::string &r = turn.system.response;
      for (size_t p; (p = r.find(target)) != std::string::npos;) r.erase(p, target.size());
    }
    ++cases;
    if (!DialogSuccess(edited, goal, corpus.db)) ++flipped;
  }

  std::vector<std::string> responses;
  for (const auto &d : corpus.dialogs) {
    for (const auto &t : d.turns) responses.push_back(t.system.response);
  }
  double identity = CorpusBleu(responses, responses);

  const std::vector<std::string> hyp = {"[hotel_name] is a guesthouse in the north , it has free wifi .",
                                        "i booked it , your reference is [hotel_ref] ."};
  const std::vector<std::string> ref = {"[hotel_name] is a nice guesthouse in the north with free wifi .",
                                        "booking was successful . the reference number is [hotel_ref] ."};
  double bleu = CorpusBleu(hyp, ref);
  double oracle = testing::OracleBleu(hyp, ref);

  bool ok = cases == 100 && flipped == 100 && std::abs(identity - 100.0) <= 1e-6 &&
            std::abs(bleu - oracle) <= 1e-9;
  return {ok, Format("%zu/%zu placeholder deletions fail; identity BLEU %.9f; fixture BLEU %.9f vs "
                     "oracle %.9f",
                     flipped, cases, identity, bleu, oracle)};
}

// 7. parse(verbalize(x)) == x on random states and acts plus published strings.
Verdict RoundTrip() {
  const Ontology ontology = SyntheticOntology();
  std::vector<std::string> domains, act_domains;
  for (const auto &[name, schema] : ontology.domains()) domains.push_back(name);
  for (const auto &[name, verbs] : ontology.act_domains()) act_domains.push_back(name);
  const std::vector<std::string> words = {"north", "london liverpool street", "cambridge", "12:45",
                                          "dontcare", "4", "guest house", "st. john's", "a-b",
                                          "yes"};
  std::mt19937_64 rng(99);
  size_t failures = 0;
  for (int i = 0; i < 10000; ++i) {
    BeliefState state;
    for (size_t n = UniformBelow(rng, 7); n > 0; --n) {
      const std::string &domain = domains[UniformBelow(rng, domains.size())];
      const DomainSchema &schema = *ontology.Find(domain);
      std::vector<std::string> slots = schema.informable;
      slots.insert(slots.end(), schema.book.begin(), schema.book.end());
      if (slots.empty()) continue;
      state.Set(domain, slots[UniformBelow(rng, slots.size())], words[UniformBelow(rng, words.size())]);
    }
    auto parsed = ParseState(VerbalizeState(state));
    if (parsed.state != state || !parsed.diagnostics.empty()) ++failures;

    std::vector<DialogAct> acts;
    for (size_t n = UniformBelow(rng, 6); n > 0; --n) {
      DialogAct act;
      const std::string &domain = domains[UniformBelow(rng, domains.size())];
      const DomainSchema &schema = *ontology.Find(domain);
      switch (UniformBelow(rng, 3)) {
        case 0: {
          act.domain = domain;
          act.act = schema.acts[UniformBelow(rng, schema.acts.size())];
          break;
        }
        case 1: {
          const std::string &prefix = act_domains[UniformBelow(rng, act_domains.size())];
          const auto &verbs = ontology.act_domains().at(prefix);
          act.domain = prefix == "general" ? prefix : prefix + " " + domain;
          act.act = verbs[UniformBelow(rng, verbs.size())];
          break;
        }
        default: {
          act.domain = domain;
          act.act = "inform";
        }
      }
      if (act.domain != "general" && UniformBelow(rng, 4) != 0) {
        std::vector<std::string> slots = schema.requestable;
        slots.insert(slots.end(), schema.informable.begin(), schema.informable.end());
        if (!slots.empty()) act.slot = slots[UniformBelow(rng, slots.size())];
      }
      acts.push_back(act);
    }
    std::vector<std::string> diagnostics;
    if (ParseActs(VerbalizeActs(acts), &diagnostics) != acts || !diagnostics.empty()) ++failures;
    auto target = ParseActResponse(ActResponseTarget(acts, "[hotel_name] is in the [hotel_area] ."));
    if (target.acts != acts || target.response != "[hotel_name] is in the [hotel_area] .") ++failures;
  }

  const char *published_acts[] = {
      "booking hotel inform NAME; inform PRICE;",
      "booking hotel inform PRICE; inform AREA; inform COUNT;",
      "attraction inform ADDRESS; inform PRICE; inform NAME; inform POST; general",
      "attraction inform AREA; inform PRICE; inform NAME; general",
      "booking restaurant inform AREA; inform COUNT; inform FOOD; inform NAME; inform PRICE;",
      "restaurant inform COUNT;",
      "taxi inform PHONE; inform TYPE;",
      "taxi request PLACE;",
  };
  size_t published = 0;
  for (const char *text : published_acts) {
    std::vector<std::string> diagnostics;
    auto acts = ParseActs(text, &diagnostics);
    if (acts.empty() || !diagnostics.empty() || ParseActs(VerbalizeActs(acts), nullptr) != acts) {
      ++failures;
    }
    if (VerbalizeActs(acts) == text) ++published;
  }
  const std::pair<const char *, int> published_states[] = {
      {"train departure: london liverpool street; destination: cambridge;", 0},
      {"train departure: cambridge;  destination: london liverpool street;", 0},
      {"taxi departure: corpus christi; destination: university arms hotel; leave is 02:30;  "
       "hotel area: centre; bookday: tuesday; bookstay: 1; name: university arms hotel; "
       "attraction type: college;",
       1},
  };
  for (const auto &[text, malformed] : published_states) {
    auto parsed = ParseState(text);
    if (static_cast<int>(parsed.diagnostics.size()) != malformed) ++failures;
    if (ParseState(VerbalizeState(parsed.state)).state != parsed.state) ++failures;
  }
  return {failures == 0,
          Format("10000 random states and act lists, %zu published act strings (%zu verbatim), "
                 "3 published states, %zu failures",
                 std::size(published_acts), published, failures)};
}

// 8. Byte-identical outputs across worker counts.
Verdict Determinism() {
  auto dir = testing::TempDir("acceptance-determinism");
  SaveCorpus(Synthetic(60, 8), dir / "train.json");
  SaveCorpus(Synthetic(10, 9, "dev"), dir / "dev.json");
  size_t compared = 0, identical = 0;
  bool ran = true;
  for (const char *mode : {"sft", "dpo"}) {
    std::vector<std::string> outputs;
    for (const char *workers : {"1", "4", "1"}) {
      std::string out = (dir / (std::string(mode) + "-w" + workers + "-" +
                                std::to_string(outputs.size()))).string();
      std::ostringstream sink, err;
      int code = RunCli({"subgoal", "iterate", "--corpus", (dir / "train.json").string(), "--dev",
                         (dir / "dev.json").string(), "--out", out, "--k", "2", "--seed", "4",
                         "--mode", mode, "--pair-policy", "all", "--diversify", "--noise-rate",
                         "0.3", "--workers", workers},
                        sink, err);
      ran = ran && code == kExitOk;
      outputs.push_back(testing::ReadFile(std::filesystem::path(out) / (std::string(mode) + ".jsonl")) +
                        "\n--\n" + testing::ReadFile(std::filesystem::path(out) / "report.json"));
    }
    for (size_t i = 1; i < outputs.size(); ++i) {
      ++compared;
      if (outputs[i] == outputs[0] && outputs[0].size() > 100) ++identical;
    }
  }
  std::filesystem::remove_all(dir);
  return {ran && compared == identical,
          Format("%zu/%zu reruns byte-identical (workers 1/4/1, sft and dpo)", identical, compared)};
}

}  // namespace
}  // namespace subgoal

int main() {
  using namespace subgoal;
  FlipCheck flips;
  struct Criterion {
    int id;
    const char *name;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "combined score reproduction", CombinedRows},
      {2, "candidate accounting", [&] { return CandidateAccounting(&flips); }},
      {3, "oracle equivalence of subgoal detection", [&] { return OracleEquivalence(&flips); }},
      {4, "flip soundness of preference pairs", [&] { return FlipSoundness(flips); }},
      {5, "error-site recovery", ErrorSiteRecovery},
      {6, "evaluator properties", EvaluatorProperties},
      {7, "round-trip parsing", RoundTrip},
      {8, "determinism across worker counts", Determinism},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception &e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << v.detail
              << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
