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

#include <doctest.h>

#include <httplib.h>

#include <cstdlib>
#include <sstream>

#include "../support/fixtures.h"
#include "subgoal/cli.h"
#include "subgoal/corpus.h"
#include "subgoal/iteration.h"
#include "subgoal/records.h"
#include "subgoal/synthetic.h"

namespace subgoal {
namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "subgoal");
  std::ostringstream out, err;
  Run run;
  run.code = RunCli(args, out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

// Synthetic corpus written to a fresh directory.
struct Workspace {
  std::filesystem::path dir;
  std::string corpus;

  explicit Workspace(const std::string &name, size_t dialogs = 10) {
    dir = testing::TempDir(name);
    corpus = (dir / "train.json").string();
    SyntheticOptions options;
    options.dialogs = dialogs;
    options.seed = 12;
    SaveCorpus(SyntheticCorpus(options), corpus);
  }
  ~Workspace() { std::filesystem::remove_all(dir); }
  std::string Path(const std::string &name) const { return (dir / name).string(); }
};

TEST_CASE("evaluate scores predictions against the corpus") {
  Workspace ws("cli-eval");
  auto ten = testing::TenDialogs();
  SaveCorpus(ten.corpus, ws.Path("ten.json"));
  nlohmann::ordered_json predictions;
  predictions["dialogs"] = nlohmann::json::array();
  for (const auto &d : ten.corpus.dialogs) predictions["dialogs"].push_back(DialogToJson(d));
  testing::WriteFile(ws.Path("pred.json"), predictions.dump());
  Run run = Cli({"evaluate", "--corpus", ws.Path("ten.json"), "--predictions", ws.Path("pred.json"),
                 "--per-domain"});
  REQUIRE(run.code == kExitOk);
  auto json_end = run.out.find("\n}\n");
  REQUIRE(json_end != std::string::npos);
  auto report = nlohmann::json::parse(run.out.substr(0, json_end + 2));
  CHECK(report["success"].get<double>() == doctest::Approx(70.0).epsilon(1e-12));
  CHECK(report["inform"].get<double>() == doctest::Approx(80.0).epsilon(1e-12));
  CHECK(report["dialogs"] == 10);
  CHECK(run.out.find("SUCCESS") != std::string::npos);
}

TEST_CASE("malformed and missing inputs exit with 2") {
  Workspace ws("cli-bad");
  testing::WriteFile(ws.Path("bad.json"), "{\n  \"dialogs\": [\n    {\"id\": }\n  ]\n}\n");
  Run run = Cli({"evaluate", "--corpus", ws.corpus, "--predictions", ws.Path("bad.json")});
  CHECK(run.code == kExitValidation);
  CHECK(run.err.find("line 3") != std::string::npos);
  CHECK(run.err.find("column") != std::string::npos);

  run = Cli({"evaluate", "--corpus", ws.Path("absent.json"), "--predictions", ws.Path("bad.json")});
  CHECK(run.code == kExitValidation);

  run = Cli({"stats", "--report", ws.Path("nope.json")});
  CHECK(run.code == kExitValidation);
  CHECK(run.err.find("nope.json") != std::string::npos);

  CHECK(Cli({"iterate", "--corpus", ws.corpus}).code == kExitValidation);
  CHECK(Cli({"frobnicate"}).code == kExitValidation);
  CHECK(Cli({"iterate", "--corpus", ws.corpus, "--out", ws.Path("o"), "--k", "0"}).code ==
        kExitValidation);
  CHECK(Cli({"iterate", "--corpus", ws.corpus, "--out", ws.Path("o"), "--goal-fraction", "0"}).code ==
        kExitValidation);
  CHECK(Cli({"iterate", "--corpus", ws.corpus, "--out", ws.Path("o"), "--noise-types", "bogus",
             "--noise-rate", "0.5"})
            .code == kExitValidation);
  CHECK(Cli({"--help"}).code == kExitOk);
}

TEST_CASE("iterate writes records and a report") {
  Workspace ws("cli-iterate");
  std::string out = ws.Path("iter0");
  Run run = Cli({"iterate", "--corpus", ws.corpus, "--out", out, "--k", "2", "--goal-fraction",
                 "1.0", "--seed", "3", "--diversify", "--noise-rate", "0.3", "--workers", "2"});
  REQUIRE(run.code == kExitOk);
  CHECK(run.out.find("s=5") != std::string::npos);
  auto report = IterationReportFromJson(ReadJsonFile(out + "/report.json"));
  CHECK(report.n_goals_sampled == 10);
  CHECK(report.n_dialogs_generated == 50);
  CHECK(std::filesystem::exists(out + "/sft.jsonl"));
  CHECK(ReadJsonl(out + "/sft.jsonl").size() == report.n_records);

  run = Cli({"iterate", "--corpus", ws.corpus, "--out", out, "--k", "2", "--goal-fraction", "0.5",
             "--seed", "3", "--diversify", "--noise-rate", "0.3", "--mode", "dpo", "--pair-policy",
             "all", "--iteration", "1"});
  REQUIRE(run.code == kExitOk);
  CHECK(std::filesystem::exists(out + "/dpo.jsonl"));
  CHECK_FALSE(std::filesystem::exists(out + "/sft.jsonl"));
  report = IterationReportFromJson(ReadJsonFile(out + "/report.json"));
  CHECK(report.n_goals_sampled == 5);
  CHECK(report.iteration == 1);
  CHECK(report.mode == TrainMode::kDpo);
}

TEST_CASE("stats tabulates reports in iteration order") {
  Workspace ws("cli-stats");
  SyntheticOptions dev_options;
  dev_options.dialogs = 4;
  dev_options.seed = 99;
  dev_options.id_prefix = "dev";
  SaveCorpus(SyntheticCorpus(dev_options), ws.Path("dev.json"));
  for (int i = 0; i < 2; ++i) {
    Run run = Cli({"iterate", "--corpus", ws.corpus, "--dev", ws.Path("dev.json"), "--out",
                   ws.Path("it" + std::to_string(i)), "--iteration", std::to_string(i),
                   "--diversify", "--noise-rate", "0.2"});
    REQUIRE(run.code == kExitOk);
  }
  Run run = Cli({"stats", "--report", ws.Path("it1/report.json"), "--report", ws.Path("it0/report.json")});
  REQUIRE(run.code == kExitOk);
  auto row0 = run.out.find("\n    0 ");
  auto row1 = run.out.find("\n    1 ");
  REQUIRE(row0 != std::string::npos);
  REQUIRE(row1 != std::string::npos);
  CHECK(row0 < row1);
  // A perfect scripted model scores the same on dev every time.
  CHECK(run.out.find("stop: combined score did not improve") != std::string::npos);
}

TEST_CASE("sample then detect matches iterate") {
  Workspace ws("cli-flow");
  std::vector<std::string> common = {"--corpus", ws.corpus, "--k", "2", "--goal-fraction", "1",
                                     "--seed", "8", "--diversify", "--noise-rate", "0.3"};
  auto with = [&](std::vector<std::string> head, std::vector<std::string> tail) {
    head.insert(head.end(), common.begin(), common.end());
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
  };
  Run sample = Cli(with({"sample"}, {"--out", ws.Path("s")}));
  REQUIRE(sample.code == kExitOk);
  auto summary = nlohmann::json::parse(sample.out);
  CHECK(summary["n_goals_processed"] == 10);
  Run detect = Cli({"detect", "--corpus", ws.corpus, "--candidates", ws.Path("s/candidates.jsonl"),
                    "--out", ws.Path("d")});
  REQUIRE(detect.code == kExitOk);
  Run iterate = Cli(with({"iterate"}, {"--out", ws.Path("i")}));
  REQUIRE(iterate.code == kExitOk);
  CHECK(testing::ReadFile(ws.Path("d/sft.jsonl")) == testing::ReadFile(ws.Path("i/sft.jsonl")));
  auto report = IterationReportFromJson(ReadJsonFile(ws.Path("i/report.json")));
  CHECK(summary["n_dialogs_generated"] == report.n_dialogs_generated);
  CHECK(nlohmann::json::parse(detect.out)["n_records"] == report.n_records);

  testing::WriteFile(ws.Path("broken.jsonl"), "{\"goal_id\": \"x\", \"source_id\": \"y\", \"candidates\": []}\n");
  CHECK(Cli({"detect", "--corpus", ws.corpus, "--candidates", ws.Path("broken.jsonl"), "--out",
             ws.Path("d2")})
            .code == kExitValidation);
}

// Nothing listens on port 1, so connections are refused at once.
constexpr int kClosedPort = 1;

TEST_CASE("unreachable backend exits with 3") {
  Workspace ws("cli-http");
  std::string url = "http://127.0.0.1:" + std::to_string(kClosedPort) + "/generate";
  Run run = Cli({"iterate", "--corpus", ws.corpus, "--out", ws.Path("o"), "--backend", "http",
                 "--endpoint", url, "--max-retries", "0"});
  CHECK(run.code == kExitBackend);
  CHECK(run.err.find("skipped goal") != std::string::npos);
  CHECK(Cli({"iterate", "--corpus", ws.corpus, "--out", ws.Path("o"), "--backend", "http"}).code ==
        kExitValidation);
}

TEST_CASE("backend url from the environment wins") {
  Workspace ws("cli-env", 4);
  Corpus corpus = LoadCorpus(ws.corpus);
  httplib::Server server;
  std::atomic<int> calls{0};
  server.Post("/gen", [&](const httplib::Request &req, httplib::Response &res) {
    ++calls;
    auto body = nlohmann::json::parse(req.body);
    nlohmann::json reply;
    reply["completions"] = nlohmann::json::array();
    bool state = body["prompt"].get<std::string>().find(" [B]") == std::string::npos;
    for (int i = 0; i < body["n"].get<int>(); ++i) {
      reply["completions"].push_back(state ? "[B] hotel area: north;" : "[A] general bye [R] bye .");
    }
    res.set_content(reply.dump(), "application/json");
  });
  int port = server.bind_to_any_port("127.0.0.1");
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  std::string url = "http://127.0.0.1:" + std::to_string(port) + "/gen";
  std::string closed = "http://127.0.0.1:" + std::to_string(kClosedPort) + "/gen";
  ::setenv("SUIT_BACKEND_URL", url.c_str(), 1);
  Run run = Cli({"iterate", "--corpus", ws.corpus, "--out", ws.Path("o"), "--backend", "http",
                 "--endpoint", closed, "--max-retries", "0", "--goal-fraction", "1"});
  ::unsetenv("SUIT_BACKEND_URL");
  server.stop();
  thread.join();
  CHECK(run.code == kExitOk);
  CHECK(calls > 0);
  auto report = IterationReportFromJson(ReadJsonFile(ws.Path("o/report.json")));
  CHECK(report.n_goals_processed == 4);
}

TEST_CASE("synth writes a loadable corpus") {
  auto dir = testing::TempDir("cli-synth");
  std::string path = (dir / "nested" / "c.json").string();
  Run run = Cli({"synth", "--dialogs", "7", "--seed", "1", "--prefix", "x", "--out", path});
  REQUIRE(run.code == kExitOk);
  Corpus corpus = LoadCorpus(path);
  CHECK(corpus.dialogs.size() == 7);
  CHECK(corpus.dialogs[0].id == "x-00000");
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace subgoal
