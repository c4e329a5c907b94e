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

#include "subgoal/corpus.h"

#include <fstream>
#include <sstream>

#include "subgoal/errors.h"
#include "subgoal/text.h"

namespace subgoal {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string LineColumn(const std::string &text, size_t byte) {
  size_t line = 1, column = 1;
  for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json &Require(const json &j, const char *key, const std::string &where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(where + ": missing key '" + key + "'");
  }
  return j.at(key);
}

std::vector<std::string> StringList(const json &j, const char *key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<std::string>>();
}

SlotValues SlotValuesFromJson(const json &j) {
  SlotValues out;
  for (const auto &[slot, value] : j.items()) {
    out[slot] = value.get<std::string>();
  }
  return out;
}

BeliefState StateFromJson(const json &j) {
  BeliefState state;
  for (const auto &[domain, slots] : j.items()) {
    for (const auto &[slot, value] : slots.items()) {
      state.Set(domain, slot, value.get<std::string>());
    }
  }
  return state;
}

ordered_json StateToJson(const BeliefState &state) {
  ordered_json out = ordered_json::object();
  for (const auto &[domain, slots] : state.domains) {
    ordered_json s = ordered_json::object();
    for (const auto &[slot, value] : slots) s[slot] = value;
    out[domain] = s;
  }
  return out;
}

// Wraps nlohmann type errors with the location they happened at.
template <typename F>
auto Guard(const std::string &where, F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception &e) {
    throw ValidationError(where + ": " + e.what());
  }
}

void CheckPlaceholders(const Ontology &ontology, const std::string &response,
                       const std::string &where) {
  size_t pos = 0;
  while ((pos = response.find('[', pos)) != std::string::npos) {
    size_t end = response.find(']', pos);
    if (end == std::string::npos) {
      throw ValidationError(where + ": unterminated placeholder");
    }
    std::string inner = response.substr(pos + 1, end - pos - 1);
    size_t underscore = inner.find('_');
    const DomainSchema *schema =
        underscore == std::string::npos ? nullptr
                                        : ontology.Find(inner.substr(0, underscore));
    std::string slot =
        underscore == std::string::npos ? "" : inner.substr(underscore + 1);
    if (schema == nullptr ||
        !(schema->IsStateSlot(slot) || schema->IsRequestable(slot) ||
          slot == schema->key_slot)) {
      throw ValidationError(where + ": placeholder [" + inner +
                            "] is not [<domain>_<slot>]");
    }
    pos = end + 1;
  }
}

}  // namespace

const Dialog *Corpus::FindDialog(const std::string &id) const {
  for (const auto &dialog : dialogs) {
    if (dialog.id == id) return &dialog;
  }
  return nullptr;
}

json ParseJsonText(const std::string &text, const std::string &origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw ValidationError(origin + ": malformed JSON at " +
                          LineColumn(text, e.byte) + ": " + e.what());
  }
}

json ReadJsonFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseJsonText(buffer.str(), path.string());
}

Ontology OntologyFromJson(const json &j) {
  return Guard("ontology", [&] {
    Ontology ontology;
    for (const auto &[name, d] : Require(j, "domains", "ontology").items()) {
      DomainSchema schema;
      schema.informable = StringList(d, "informable");
      schema.book = StringList(d, "book");
      schema.requestable = StringList(d, "requestable");
      schema.acts = StringList(d, "acts");
      schema.entity_bearing = d.value("entity_bearing", true);
      schema.key_slot = d.value("key_slot", std::string("name"));
      ontology.AddDomain(name, std::move(schema));
    }
    if (j.contains("act_domains")) {
      for (const auto &[name, verbs] : j.at("act_domains").items()) {
        ontology.AddActDomain(name, verbs.get<std::vector<std::string>>());
      }
    }
    return ontology;
  });
}

ordered_json OntologyToJson(const Ontology &ontology) {
  ordered_json domains = ordered_json::object();
  for (const auto &[name, schema] : ontology.domains()) {
    domains[name] = {{"informable", schema.informable},
                     {"book", schema.book},
                     {"requestable", schema.requestable},
                     {"acts", schema.acts},
                     {"entity_bearing", schema.entity_bearing},
                     {"key_slot", schema.key_slot}};
  }
  ordered_json act_domains = ordered_json::object();
  for (const auto &[name, verbs] : ontology.act_domains()) {
    act_domains[name] = verbs;
  }
  return {{"domains", domains}, {"act_domains", act_domains}};
}

Turn TurnFromJson(const json &j) {
  Turn turn;
  turn.user = j.value("user", std::string());
  if (j.contains("state")) turn.system.state = StateFromJson(j.at("state"));
  if (j.contains("acts")) {
    for (const auto &a : j.at("acts")) {
      DialogAct act;
      act.domain = a.at("domain").get<std::string>();
      act.act = a.at("act").get<std::string>();
      if (a.contains("slot") && !a.at("slot").is_null()) {
        act.slot = a.at("slot").get<std::string>();
      }
      turn.system.acts.push_back(std::move(act));
    }
  }
  turn.system.response = j.value("response", std::string());
  return turn;
}

ordered_json TurnToJson(const Turn &turn) {
  ordered_json acts = ordered_json::array();
  for (const auto &act : turn.system.acts) {
    ordered_json a = {{"domain", act.domain}, {"act", act.act}};
    if (act.slot.has_value()) a["slot"] = *act.slot;
    acts.push_back(a);
  }
  return {{"user", turn.user},
          {"state", StateToJson(turn.system.state)},
          {"acts", acts},
          {"response", turn.system.response}};
}

Dialog DialogFromJson(const json &j) {
  return Guard("dialog", [&] {
    Dialog dialog;
    dialog.id = Require(j, "id", "dialog").get<std::string>();
    dialog.goal_id = j.value("goal_id", dialog.id);
    for (const auto &t : Require(j, "turns", "dialog " + dialog.id)) {
      dialog.turns.push_back(TurnFromJson(t));
    }
    return dialog;
  });
}

ordered_json DialogToJson(const Dialog &dialog) {
  ordered_json turns = ordered_json::array();
  for (const auto &turn : dialog.turns) turns.push_back(TurnToJson(turn));
  return {{"id", dialog.id}, {"goal_id", dialog.goal_id}, {"turns", turns}};
}

UserGoal GoalFromJson(const std::string &id, const json &j) {
  return Guard("goal " + id, [&] {
    UserGoal goal;
    goal.id = id;
    for (const auto &[domain, d] : j.items()) {
      DomainGoal g;
      if (d.contains("constraints")) {
        g.constraints = SlotValuesFromJson(d.at("constraints"));
      }
      for (const auto &slot : StringList(d, "requests")) g.requests.insert(slot);
      goal.domains[domain] = std::move(g);
    }
    return goal;
  });
}

ordered_json GoalToJson(const UserGoal &goal) {
  ordered_json out = ordered_json::object();
  for (const auto &[domain, g] : goal.domains) {
    ordered_json constraints = ordered_json::object();
    for (const auto &[slot, value] : g.constraints) constraints[slot] = value;
    out[domain] = {{"constraints", constraints},
                   {"requests", std::vector<std::string>(g.requests.begin(),
                                                         g.requests.end())}};
  }
  return out;
}

Corpus CorpusFromJson(const json &j) {
  Corpus corpus;
  Ontology ontology = OntologyFromJson(Require(j, "ontology", "corpus"));
  std::map<std::string, std::vector<Entity>> tables;
  if (j.contains("database")) {
    Guard("database", [&] {
      for (const auto &[domain, rows] : j.at("database").items()) {
        auto &table = tables[domain];
        for (const auto &row : rows) {
          Entity entity;
          for (const auto &[slot, value] : row.items()) {
            entity[slot] = value.is_string() ? value.get<std::string>()
                                             : value.dump();
          }
          table.push_back(std::move(entity));
        }
      }
      return 0;
    });
  }
  corpus.db = Database(std::move(ontology), std::move(tables));
  std::set<std::string> ids;
  for (const auto &d : Require(j, "dialogs", "corpus")) {
    Dialog dialog = DialogFromJson(d);
    if (!ids.insert(dialog.id).second) {
      throw ValidationError("duplicate dialog id: " + dialog.id);
    }
    UserGoal goal = GoalFromJson(dialog.goal_id,
                                 Require(d, "goal", "dialog " + dialog.id));
    auto [it, inserted] = corpus.goals.emplace(dialog.goal_id, goal);
    if (!inserted && !(it->second == goal)) {
      throw ValidationError("conflicting goals for goal id " + dialog.goal_id);
    }
    corpus.dialogs.push_back(std::move(dialog));
  }
  ValidateCorpus(corpus);
  return corpus;
}

ordered_json CorpusToJson(const Corpus &corpus) {
  ordered_json database = ordered_json::object();
  for (const auto &[domain, schema] : corpus.ontology().domains()) {
    if (!schema.entity_bearing) continue;
    ordered_json rows = ordered_json::array();
    for (const auto &entity : corpus.db.Table(domain)) {
      ordered_json row = ordered_json::object();
      for (const auto &[slot, value] : entity) row[slot] = value;
      rows.push_back(row);
    }
    database[domain] = rows;
  }
  ordered_json dialogs = ordered_json::array();
  for (const auto &dialog : corpus.dialogs) {
    ordered_json d = DialogToJson(dialog);
    d["goal"] = GoalToJson(corpus.goals.at(dialog.goal_id));
    dialogs.push_back(d);
  }
  return {{"ontology", OntologyToJson(corpus.ontology())},
          {"database", database},
          {"dialogs", dialogs}};
}

Corpus LoadCorpus(const std::filesystem::path &path) {
  return CorpusFromJson(ReadJsonFile(path));
}

void SaveCorpus(const Corpus &corpus, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << CorpusToJson(corpus).dump(1) << '\n';
}

void ValidateCorpus(const Corpus &corpus) {
  const Ontology &ontology = corpus.ontology();
  for (const auto &[id, goal] : corpus.goals) {
    if (goal.domains.empty()) {
      throw ValidationError("goal " + id + " has no domain");
    }
    for (const auto &[domain, g] : goal.domains) {
      const DomainSchema *schema = ontology.Find(domain);
      if (schema == nullptr) {
        throw ValidationError("goal " + id + ": unknown domain " + domain);
      }
      for (const auto &[slot, value] : g.constraints) {
        if (!schema->IsStateSlot(slot)) {
          throw ValidationError("goal " + id + ": unknown slot " + domain +
                                "." + slot);
        }
      }
      for (const auto &slot : g.requests) {
        if (!schema->IsRequestable(slot) && slot != schema->key_slot) {
          throw ValidationError("goal " + id + ": slot " + domain + "." +
                                slot + " is not requestable");
        }
      }
    }
  }
  for (const auto &dialog : corpus.dialogs) {
    if (dialog.turns.empty()) {
      throw ValidationError("dialog " + dialog.id + " has no turns");
    }
    for (size_t t = 0; t < dialog.turns.size(); ++t) {
      const std::string where =
          "dialog " + dialog.id + " turn " + std::to_string(t);
      const SystemTurn &system = dialog.turns[t].system;
      for (const auto &[domain, slots] : system.state.domains) {
        const DomainSchema *schema = ontology.Find(domain);
        if (schema == nullptr) {
          throw ValidationError(where + ": unknown state domain " + domain);
        }
        for (const auto &[slot, value] : slots) {
          if (!schema->IsStateSlot(slot)) {
            throw ValidationError(where + ": unknown state slot " + domain +
                                  "." + slot);
          }
          if (Trim(value).empty()) {
            throw ValidationError(where + ": empty value for " + domain + "." +
                                  slot);
          }
        }
      }
      for (const auto &act : system.acts) {
        if (!ontology.IsKnownAct(act.domain, act.act)) {
          throw ValidationError(where + ": unknown act '" + act.domain + " " +
                                act.act + "'");
        }
      }
      CheckPlaceholders(ontology, system.response, where);
    }
  }
}

std::vector<Dialog> LoadDialogs(const std::filesystem::path &path) {
  json j = ReadJsonFile(path);
  std::vector<Dialog> out;
  for (const auto &d : Require(j, "dialogs", path.string())) {
    out.push_back(DialogFromJson(d));
  }
  return out;
}

}  // namespace subgoal
