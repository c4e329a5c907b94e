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

#include "subgoal/evaluator.h"

#include <algorithm>
#include <cstdio>
#include <set>

#include "subgoal/bleu.h"
#include "subgoal/errors.h"

namespace subgoal {

namespace {

SlotValues InformableOnly(const DomainSchema &schema, const SlotValues *slots) {
  SlotValues out;
  if (slots == nullptr) return out;
  for (const auto &[slot, value] : *slots) {
    if (schema.IsInformable(slot)) out.emplace(slot, value);
  }
  return out;
}

double Percent(size_t part, size_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) /
                                static_cast<double>(whole);
}

}  // namespace

DomainOutcome EvaluateDomain(const Dialog &dialog, const UserGoal &goal,
                             const Database &db, std::string_view domain) {
  const DomainGoal *domain_goal = goal.Find(domain);
  if (domain_goal == nullptr) throw NotInGoal(std::string(domain));
  const DomainSchema *schema = db.ontology().Find(domain);
  if (schema == nullptr) throw UnknownDomain(std::string(domain));

  DomainOutcome outcome;
  outcome.domain = std::string(domain);

  if (!schema->entity_bearing) {
    outcome.inform = true;
  } else {
    const std::string key = Placeholder(domain, schema->key_slot);
    const Turn *last_offer = nullptr;
    for (auto it = dialog.turns.rbegin(); it != dialog.turns.rend(); ++it) {
      if (it->system.response.find(key) != std::string::npos) {
        last_offer = &*it;
        break;
      }
    }
    SlotValues goal_constraints =
        InformableOnly(*schema, &domain_goal->constraints);
    if (last_offer == nullptr) {
      outcome.inform = goal_constraints.empty();
    } else {
      SlotValues belief =
          InformableOnly(*schema, last_offer->system.state.Find(domain));
      std::vector<size_t> offered = db.Match(domain, belief);
      std::vector<size_t> wanted = db.Match(domain, goal_constraints);
      const auto &table = db.Table(domain);
      for (size_t i : offered) outcome.offered.push_back(table[i].at(schema->key_slot));
      // Both index lists are ascending.
      std::vector<size_t> common;
      std::set_intersection(offered.begin(), offered.end(), wanted.begin(),
                            wanted.end(), std::back_inserter(common));
      outcome.inform = !offered.empty() && !common.empty();
    }
  }

  outcome.success = outcome.inform;
  if (outcome.success) {
    for (const auto &slot : domain_goal->requests) {
      const std::string placeholder = Placeholder(domain, slot);
      bool mentioned = std::any_of(
          dialog.turns.begin(), dialog.turns.end(), [&](const Turn &turn) {
            return turn.system.response.find(placeholder) != std::string::npos;
          });
      if (!mentioned) {
        outcome.success = false;
        break;
      }
    }
  }
  return outcome;
}

bool DialogSuccess(const Dialog &dialog, const UserGoal &goal,
                   const Database &db) {
  for (const auto &[domain, unused] : goal.domains) {
    if (!EvaluateDomain(dialog, goal, db, domain).success) return false;
  }
  return true;
}

double Combined(double bleu, double inform_rate, double success_rate) {
  return bleu + (inform_rate + success_rate) / 2.0;
}

EvalReport EvaluateCorpus(
    const std::vector<Dialog> &dialogs,
    const std::map<std::string, UserGoal> &goals, const Database &db,
    const std::vector<std::vector<std::string>> &references) {
  if (references.size() != dialogs.size()) {
    throw LengthMismatch("references for " + std::to_string(references.size()) +
                         " dialogs, expected " +
                         std::to_string(dialogs.size()));
  }
  // Reduce in dialog id order so the report never depends on input order.
  std::vector<size_t> order(dialogs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return dialogs[a].id < dialogs[b].id;
  });

  struct Counts {
    size_t inform = 0, success = 0, total = 0;
  };
  std::map<std::string, Counts> domain_counts;
  size_t inform = 0, success = 0;
  std::vector<std::string> hypotheses, flat_references;

  for (size_t i : order) {
    const Dialog &dialog = dialogs[i];
    auto goal = goals.find(dialog.goal_id);
    if (goal == goals.end()) throw MissingGoal(dialog.goal_id);
    if (references[i].size() != dialog.turns.size()) {
      throw LengthMismatch("dialog " + dialog.id + " has " +
                           std::to_string(dialog.turns.size()) +
                           " turns but " + std::to_string(references[i].size()) +
                           " references");
    }
    bool all_inform = true, all_success = true;
    for (const auto &[domain, unused] : goal->second.domains) {
      DomainOutcome outcome = EvaluateDomain(dialog, goal->second, db, domain);
      Counts &counts = domain_counts[domain];
      ++counts.total;
      counts.inform += outcome.inform;
      counts.success += outcome.success;
      all_inform = all_inform && outcome.inform;
      all_success = all_success && outcome.success;
    }
    inform += all_inform;
    success += all_success;
    for (size_t t = 0; t < dialog.turns.size(); ++t) {
      hypotheses.push_back(dialog.turns[t].system.response);
      flat_references.push_back(references[i][t]);
    }
  }

  EvalReport report;
  report.dialogs = dialogs.size();
  report.bleu = hypotheses.empty() ? 0.0 : CorpusBleu(hypotheses, flat_references);
  report.inform_rate = Percent(inform, dialogs.size());
  report.success_rate = Percent(success, dialogs.size());
  report.combined = Combined(report.bleu, report.inform_rate, report.success_rate);
  for (const auto &[domain, counts] : domain_counts) {
    report.per_domain[domain] = {Percent(counts.inform, counts.total),
                                 Percent(counts.success, counts.total),
                                 counts.total};
  }
  return report;
}

nlohmann::ordered_json ToJson(const EvalReport &report) {
  nlohmann::ordered_json out;
  out["bleu"] = report.bleu;
  out["inform"] = report.inform_rate;
  out["success"] = report.success_rate;
  out["combined"] = report.combined;
  out["dialogs"] = report.dialogs;
  nlohmann::ordered_json per_domain = nlohmann::ordered_json::object();
  for (const auto &[domain, rates] : report.per_domain) {
    per_domain[domain] = {{"inform", rates.inform},
                          {"success", rates.success},
                          {"dialogs", rates.dialogs}};
  }
  out["per_domain"] = per_domain;
  return out;
}

const std::vector<std::string> &ReportDomainOrder() {
  static const std::vector<std::string> kOrder = {"train", "attraction",
                                                  "restaurant", "taxi", "hotel"};
  return kOrder;
}

std::string FormatDomainTable(const EvalReport &report) {
  std::vector<std::string> columns = ReportDomainOrder();
  for (const auto &[domain, unused] : report.per_domain) {
    if (std::find(columns.begin(), columns.end(), domain) == columns.end()) {
      columns.push_back(domain);
    }
  }
  std::string out;
  char cell[64];
  auto row = [&](const char *label, auto value) {
    std::snprintf(cell, sizeof(cell), "%-8s", label);
    out += cell;
    for (const auto &domain : columns) {
      auto it = report.per_domain.find(domain);
      if (it == report.per_domain.end()) {
        std::snprintf(cell, sizeof(cell), " %11s", "-");
      } else {
        std::snprintf(cell, sizeof(cell), " %11.1f", value(it->second));
      }
      out += cell;
    }
    out += '\n';
  };
  std::snprintf(cell, sizeof(cell), "%-8s", "");
  out += cell;
  for (const auto &domain : columns) {
    std::snprintf(cell, sizeof(cell), " %11s", domain.c_str());
    out += cell;
  }
  out += '\n';
  row("INFORM", [](const DomainRates &r) { return r.inform; });
  row("SUCCESS", [](const DomainRates &r) { return r.success; });
  return out;
}

}  // namespace subgoal
