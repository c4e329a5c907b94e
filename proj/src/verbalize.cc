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

#include "subgoal/verbalize.h"

#include <algorithm>

#include "subgoal/text.h"

namespace subgoal {

namespace {

constexpr std::string_view kStateToken = "[B]";
constexpr std::string_view kActToken = "[A]";
constexpr std::string_view kResponseToken = "[R]";

bool IsLowerToken(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
           return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '-';
         });
}

bool IsUpperToken(std::string_view s) {
  bool has_letter = false;
  for (char c : s) {
    if (c >= 'A' && c <= 'Z') {
      has_letter = true;
    } else if (!((c >= '0' && c <= '9') || c == '_' || c == '-')) {
      return false;
    }
  }
  return has_letter;
}

std::vector<std::string_view> SplitClauses(std::string_view text) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view clause = Trim(text.substr(start, end - start));
    if (!clause.empty()) out.push_back(clause);
    start = end + 1;
  }
  return out;
}

std::string Quote(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

std::string VerbalizeState(const BeliefState &state) {
  std::string out;
  for (const auto &[domain, slots] : state.domains) {
    bool first = true;
    for (const auto &[slot, value] : slots) {
      if (!out.empty()) out += ' ';
      if (first) {
        out += domain;
        out += ' ';
        first = false;
      }
      out += slot;
      out += ": ";
      out += value;
      out += ';';
    }
  }
  return out;
}

StateParse ParseState(std::string_view text) {
  StateParse result;
  std::string_view body = Trim(text);
  if (StartsWith(body, kStateToken)) body = body.substr(kStateToken.size());
  std::string domain;
  for (std::string_view clause : SplitClauses(body)) {
    size_t colon = clause.find(':');
    if (colon == std::string_view::npos) {
      result.diagnostics.push_back("state clause without ':': " +
                                   Quote(clause));
      continue;
    }
    auto keys = SplitWhitespace(clause.substr(0, colon));
    std::string value(Trim(clause.substr(colon + 1)));
    std::string slot;
    if (keys.size() == 2 && IsLowerToken(keys[0]) && IsLowerToken(keys[1])) {
      domain = keys[0];
      slot = keys[1];
    } else if (keys.size() == 1 && IsLowerToken(keys[0])) {
      slot = keys[0];
    } else {
      result.diagnostics.push_back("malformed state clause: " + Quote(clause));
      continue;
    }
    if (domain.empty()) {
      result.diagnostics.push_back("state clause without domain: " +
                                   Quote(clause));
      continue;
    }
    if (value.empty()) {
      result.diagnostics.push_back("state clause without value: " +
                                   Quote(clause));
      continue;
    }
    const SlotValues *existing = result.state.Find(domain);
    if (existing != nullptr && existing->contains(slot)) {
      result.diagnostics.push_back("duplicate slot " + domain + " " + slot +
                                   ", keeping the last value");
    }
    result.state.Set(domain, slot, value);
  }
  return result;
}

std::string VerbalizeActs(const std::vector<DialogAct> &acts) {
  std::string out;
  const std::string *previous = nullptr;
  for (const auto &act : acts) {
    if (!out.empty()) out += ' ';
    if (previous == nullptr || *previous != act.domain) {
      out += act.domain;
      out += ' ';
    }
    out += act.act;
    if (act.slot.has_value()) {
      out += ' ';
      out += ToUpper(*act.slot);
    }
    out += ';';
    previous = &act.domain;
  }
  return out;
}

std::vector<DialogAct> ParseActs(std::string_view text,
                                 std::vector<std::string> *diagnostics) {
  std::vector<DialogAct> acts;
  std::string domain;
  auto report = [&](std::string message) {
    if (diagnostics != nullptr) diagnostics->push_back(std::move(message));
  };
  for (std::string_view clause : SplitClauses(text)) {
    auto tokens = SplitWhitespace(clause);
    DialogAct act;
    if (IsUpperToken(tokens.back())) {
      act.slot = ToLower(tokens.back());
      tokens.pop_back();
    }
    if (tokens.empty() ||
        !std::all_of(tokens.begin(), tokens.end(),
                     [](const std::string &t) { return IsLowerToken(t); })) {
      report("malformed act clause: " + Quote(clause));
      continue;
    }
    act.act = tokens.back();
    tokens.pop_back();
    if (!tokens.empty()) {
      domain.clear();
      for (const auto &token : tokens) {
        if (!domain.empty()) domain += ' ';
        domain += token;
      }
    } else if (domain.empty()) {
      report("act clause without domain: " + Quote(clause));
    }
    act.domain = domain;
    acts.push_back(std::move(act));
  }
  return acts;
}

ActResponseParse ParseActResponse(std::string_view text) {
  ActResponseParse result;
  std::string_view body = Trim(text);
  size_t response_pos = body.find(kResponseToken);
  if (!StartsWith(body, kActToken) || response_pos == std::string_view::npos) {
    result.response = std::string(body);
    if (!StartsWith(body, kActToken)) {
      result.diagnostics.push_back("missing [A] token");
    }
    if (response_pos == std::string_view::npos) {
      result.diagnostics.push_back("missing [R] token");
    }
    return result;
  }
  std::string_view acts_text = body.substr(
      kActToken.size(), response_pos - kActToken.size());
  result.acts = ParseActs(acts_text, &result.diagnostics);
  result.response =
      std::string(Trim(body.substr(response_pos + kResponseToken.size())));
  return result;
}

std::string StateTarget(const BeliefState &state) {
  std::string text = VerbalizeState(state);
  if (text.empty()) return std::string(kStateToken);
  return std::string(kStateToken) + " " + text;
}

std::string ActResponseTarget(const std::vector<DialogAct> &acts,
                              std::string_view response) {
  std::string out(kActToken);
  std::string verbalized = VerbalizeActs(acts);
  if (!verbalized.empty()) {
    out += ' ';
    out += verbalized;
  }
  out += ' ';
  out += kResponseToken;
  if (!response.empty()) {
    out += ' ';
    out += response;
  }
  return out;
}

}  // namespace subgoal
