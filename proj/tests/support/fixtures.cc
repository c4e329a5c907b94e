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

#include "fixtures.h"

#include <atomic>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace subgoal::testing {

Ontology SmallOntology() {
  Ontology ontology;
  DomainSchema hotel;
  hotel.informable = {"area", "internet", "name", "parking", "pricerange", "stars", "type"};
  hotel.book = {"bookday", "bookpeople", "bookstay"};
  hotel.requestable = {"address", "phone", "postcode", "price", "ref"};
  hotel.acts = {"inform", "request", "recommend", "select", "offerbook"};
  ontology.AddDomain("hotel", hotel);
  DomainSchema train;
  train.informable = {"arriveby", "day", "departure", "destination", "id", "leaveat"};
  train.book = {"bookpeople"};
  train.requestable = {"duration", "price", "ref"};
  train.acts = {"inform", "request", "offerbook"};
  train.key_slot = "id";
  ontology.AddDomain("train", train);
  DomainSchema taxi;
  taxi.informable = {"arriveby", "departure", "destination", "leaveat"};
  taxi.requestable = {"phone", "type"};
  taxi.acts = {"inform", "request"};
  taxi.entity_bearing = false;
  ontology.AddDomain("taxi", taxi);
  ontology.AddActDomain("booking", {"book", "inform"});
  ontology.AddActDomain("general", {"bye", "reqmore", "welcome"});
  return ontology;
}

std::map<std::string, std::vector<Entity>> SmallTables() {
  return {
      {"hotel",
       {{{"name", "avalon"}, {"area", "north"}, {"pricerange", "moderate"},
         {"internet", "yes"}, {"parking", "no"}, {"stars", "4"}, {"type", "guesthouse"},
         {"address", "62 gilbert road"}},
        {{"name", "acorn guest house"}, {"area", "North "}, {"pricerange", "moderate"},
         {"internet", "yes"}, {"parking", "yes"}, {"stars", "4"}, {"type", "guesthouse"}},
        {{"name", "gonville hotel"}, {"area", "centre"}, {"pricerange", "expensive"},
         {"internet", "yes"}, {"parking", "yes"}, {"stars", "3"}, {"type", "hotel"}}}},
      {"train",
       {{{"id", "tr1234"}, {"departure", "london liverpool street"},
         {"destination", "cambridge"}, {"day", "friday"}, {"leaveat", "13:00"}},
        {{"id", "tr5678"}, {"departure", "cambridge"},
         {"destination", "london liverpool street"}, {"day", "friday"},
         {"leaveat", "13:30"}}}},
  };
}

Database SmallDatabase() { return Database(SmallOntology(), SmallTables()); }

SystemTurn Sys(BeliefState state, std::vector<DialogAct> acts, std::string response) {
  return SystemTurn{std::move(state), std::move(acts), std::move(response)};
}

BeliefState HotelState(std::map<std::string, std::string> slots) {
  BeliefState state;
  for (const auto &[slot, value] : slots) state.Set("hotel", slot, value);
  return state;
}

UserGoal HotelGoal() {
  UserGoal goal;
  goal.id = "hotel-goal";
  goal.domains["hotel"].constraints = {
      {"area", "north"}, {"pricerange", "moderate"}, {"internet", "yes"}};
  goal.domains["hotel"].requests = {"address"};
  return goal;
}

Dialog HotelDialog() {
  Dialog d;
  d.id = "hotel-dialog";
  d.goal_id = "hotel-goal";
  auto s0 = HotelState({{"area", "north"}, {"internet", "yes"}});
  auto s1 = HotelState({{"area", "north"}, {"internet", "yes"}, {"pricerange", "moderate"},
                        {"name", "avalon"}});
  auto s2 = s1;
  s2.Set("hotel", "bookpeople", "2");
  s2.Set("hotel", "bookstay", "3");
  d.turns = {
      {"Hello! Can you tell me about places to stay in the north? I need free wifi.",
       Sys(s0, {{"hotel", "request", "pricerange"}},
           "i have several options . what price range would you like ?")},
      {"I do not need parking, is the Avalon moderately priced?",
       Sys(s1, {{"booking hotel", "inform", "name"}, {"booking hotel", "inform", "price"}},
           "[hotel_name] is [hotel_price] . would you like me to book it for you ?")},
      {"Yes, for 2 people and 3 nights please.",
       Sys(s2, {{"booking", "book", "ref"}},
           "booking was successful , the reference number is [hotel_ref] .")},
      {"Thanks, what is the address?",
       Sys(s2, {{"hotel", "inform", "address"}, {"hotel", "inform", "name"}},
           "[hotel_name] is located at [hotel_address] . goodbye .")},
  };
  return d;
}

CandidateGroup ContrastGroup() {
  UserGoal goal;
  goal.id = "contrast";
  goal.domains["hotel"].constraints = {{"area", "north"}, {"pricerange", "moderate"}};
  goal.domains["hotel"].requests = {"address", "phone"};

  auto north = HotelState({{"area", "north"}});
  auto good = HotelState({{"area", "north"}, {"pricerange", "moderate"}});
  auto bad = HotelState({{"area", "north"}, {"pricerange", "expensive"}});
  Dialog s;
  s.id = "contrast#000";
  s.goal_id = goal.id;
  s.turns = {
      {"i need a hotel in the north .",
       Sys(north, {{"hotel", "request", "pricerange"}}, "what price range do you prefer ?")},
      {"moderate please .",
       Sys(good, {{"hotel", "recommend", "name"}}, "i recommend [hotel_name] in the north .")},
      {"does it have parking ?",
       Sys(good, {{"hotel", "inform", "parking"}}, "yes , it has free parking .")},
      {"what is the address ?",
       Sys(good, {{"hotel", "inform", "address"}}, "the address is [hotel_address] .")},
      {"and the phone number ?",
       Sys(good, {{"hotel", "inform", "phone"}, {"general", "bye", std::nullopt}},
           "the phone number is [hotel_phone] . goodbye .")},
  };
  Dialog o = s;
  o.id = "contrast#001";
  o.turns[1].system.state = bad;
  o.turns[3].system = Sys(good, {{"general", "reqmore", std::nullopt}},
                          "sorry , i do not know that . anything else ?");
  Dialog j = s;
  j.id = "contrast#002";
  j.turns[2].system = Sys(good, {{"hotel", "inform", "internet"}}, "it has free wifi .");
  j.turns[3].system = Sys(good, {{"hotel", "inform", "postcode"}},
                          "the postcode is [hotel_postcode] .");
  Dialog u = s;
  u.id = "contrast#003";
  u.turns[4].system = Sys(good, {{"general", "bye", std::nullopt}}, "goodbye .");

  CandidateGroup group;
  group.goal_id = goal.id;
  group.goal = goal;
  group.source = s;
  group.source.id = "contrast";
  int index = 0;
  for (Dialog *d : {&s, &o, &j, &u}) {
    Candidate c;
    c.id = d->id;
    c.index = index;
    c.greedy = index == 0;
    ++index;
    c.dialog = *d;
    group.candidates.push_back(std::move(c));
  }
  return group;
}

SmallCorpus TenDialogs() {
  SmallCorpus out;
  Corpus &corpus = out.corpus;
  corpus.db = SmallDatabase();
  const Dialog base = HotelDialog();
  for (int i = 0; i < 10; ++i) {
    Dialog d = base;
    d.id = "ten-" + std::to_string(i);
    d.goal_id = d.id;
    UserGoal goal = HotelGoal();
    goal.id = d.id;
    switch (i) {
      case 3:  // never mentions the address
        d.turns[3].system.response = "[hotel_name] is a fine choice . goodbye .";
        break;
      case 6:  // offers with a wrong area at the last offer turn
        d.turns[3].system.state.Set("hotel", "area", "centre");
        break;
      case 8:  // never offers anything
        for (auto &turn : d.turns) {
          auto &r = turn.system.response;
          for (size_t p; (p = r.find("[hotel_name]")) != std::string::npos;) {
            r.replace(p, 12, "it");
          }
        }
        break;
      default:
        break;
    }
    std::vector<std::string> refs;
    for (const auto &turn : base.turns) refs.push_back(turn.system.response);
    out.references.push_back(std::move(refs));
    corpus.goals.emplace(goal.id, goal);
    corpus.dialogs.push_back(std::move(d));
  }
  return out;
}

Corpus HotelCorpus() {
  Corpus corpus;
  corpus.db = SmallDatabase();
  corpus.dialogs.push_back(HotelDialog());
  UserGoal goal = HotelGoal();
  corpus.goals.emplace(goal.id, goal);
  return corpus;
}

std::filesystem::path TempDir(const std::string &name) {
  static std::atomic<int> counter{0};
  auto dir = std::filesystem::temp_directory_path() /
             ("subgoal-test-" + std::to_string(::getpid()) + "-" +
              std::to_string(counter++) + "-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

}  // namespace subgoal::testing
