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

#include "subgoal/synthetic.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <random>

#include "subgoal/errors.h"
#include "subgoal/text.h"

namespace subgoal {

namespace {

using Rng = std::mt19937_64;
using Pairs = std::vector<std::pair<std::string, std::string>>;

const std::vector<std::string> kAreas = {"centre", "north", "south", "east", "west"};
const std::vector<std::string> kPrices = {"cheap", "moderate", "expensive"};
const std::vector<std::string> kFoods = {"italian", "chinese", "indian", "british",
                                         "french",  "thai",    "mexican", "turkish"};
const std::vector<std::string> kAttractionTypes = {
    "museum", "college", "park", "theatre", "nightclub", "church", "cinema"};
const std::vector<std::string> kStations = {
    "cambridge", "london kings cross", "london liverpool street", "ely",
    "norwich",   "stevenage",          "peterborough",           "birmingham new street"};
const std::vector<std::string> kDays = {"monday", "tuesday",  "wednesday", "thursday",
                                        "friday", "saturday", "sunday"};
const std::vector<std::string> kAdjectives = {
    "acorn",  "alpha",  "bridge", "city",   "golden", "green",  "grand",
    "lovell", "maple",  "meghna", "old",    "royal",  "silver", "river",
    "stone",  "sunny",  "oak",    "willow", "cherry", "hidden"};
const std::vector<std::string> kNouns = {
    "house", "lodge", "garden", "court", "arms",  "view",  "corner",
    "place", "mill",  "fields", "gate",  "tree",  "cross", "castle",
    "inn",   "yard",  "hall",   "point", "wharf", "road"};
const std::vector<std::string> kStreets = {"mill road",    "regent street", "hills road",
                                           "station road", "king street",   "market hill"};
const std::vector<std::string> kTaxiPlaces = {
    "the station", "the museum", "the market", "the college", "the airport", "the park"};

const std::string &Pick(Rng &rng, const std::vector<std::string> &values) {
  return values[UniformBelow(rng, values.size())];
}

bool Chance(Rng &rng, double p) { return UnitInterval(rng()) < p; }

std::string Clock(int minutes) {
  char buffer[8];
  std::snprintf(buffer, sizeof(buffer), "%02d:%02d", (minutes / 60) % 24, minutes % 60);
  return buffer;
}

std::string Digits(Rng &rng, int count) {
  std::string out;
  for (int i = 0; i < count; ++i) out.push_back(static_cast<char>('0' + UniformBelow(rng, 10)));
  return out;
}

Entity Contact(Rng &rng) {
  return {{"address", Digits(rng, 2) + " " + Pick(rng, kStreets)},
          {"phone", "01223" + Digits(rng, 6)},
          {"postcode", "cb" + Digits(rng, 1) + " " + Digits(rng, 1) + "ab"}};
}

// Distinct names for one domain.
std::vector<std::string> Names(Rng &rng, size_t count, const std::string &suffix) {
  std::vector<std::string> all;
  for (const auto &a : kAdjectives) {
    for (const auto &n : kNouns) all.push_back(a + " " + n + suffix);
  }
  if (count > all.size()) throw ValidationError("too many synthetic entities");
  for (size_t i = 0; i < count; ++i) {
    std::swap(all[i], all[i + UniformBelow(rng, all.size() - i)]);
  }
  all.resize(count);
  return all;
}

std::map<std::string, std::vector<Entity>> Tables(const SyntheticOptions &options) {
  Rng rng(MixSeed(options.seed, 0xdb));
  std::map<std::string, std::vector<Entity>> tables;
  for (const auto &name : Names(rng, options.hotels, "")) {
    Entity e = Contact(rng);
    e["name"] = name;
    e["area"] = Pick(rng, kAreas);
    e["pricerange"] = Pick(rng, kPrices);
    e["type"] = Chance(rng, 0.5) ? "hotel" : "guesthouse";
    e["internet"] = Chance(rng, 0.7) ? "yes" : "no";
    e["parking"] = Chance(rng, 0.6) ? "yes" : "no";
    e["stars"] = std::to_string(2 + UniformBelow(rng, 4));
    e["price"] = std::to_string(50 + 10 * UniformBelow(rng, 12)) + " pounds";
    tables["hotel"].push_back(std::move(e));
  }
  for (const auto &name : Names(rng, options.restaurants, " kitchen")) {
    Entity e = Contact(rng);
    e["name"] = name;
    e["area"] = Pick(rng, kAreas);
    e["pricerange"] = Pick(rng, kPrices);
    e["food"] = Pick(rng, kFoods);
    tables["restaurant"].push_back(std::move(e));
  }
  for (const auto &name : Names(rng, options.attractions, " gallery")) {
    Entity e = Contact(rng);
    e["name"] = name;
    e["area"] = Pick(rng, kAreas);
    e["type"] = Pick(rng, kAttractionTypes);
    e["entrancefee"] = Chance(rng, 0.4) ? "free" : std::to_string(2 + UniformBelow(rng, 6)) + " pounds";
    tables["attraction"].push_back(std::move(e));
  }
  for (size_t i = 0; i < options.trains; ++i) {
    Entity e;
    e["id"] = "tr" + std::to_string(1000 + i * 7 % 9000);
    e["departure"] = Pick(rng, kStations);
    do {
      e["destination"] = Pick(rng, kStations);
    } while (e["destination"] == e["departure"]);
    e["day"] = Pick(rng, kDays);
    int leave = 5 * 60 + 15 * static_cast<int>(UniformBelow(rng, 64));
    int duration = 30 + 15 * static_cast<int>(UniformBelow(rng, 8));
    e["leaveat"] = Clock(leave);
    e["arriveby"] = Clock(leave + duration);
    e["duration"] = std::to_string(duration) + " minutes";
    e["price"] = std::to_string(5 + UniformBelow(rng, 30)) + " pounds";
    tables["train"].push_back(std::move(e));
  }
  return tables;
}

std::string Phrase(const std::string &slot, const std::string &value) {
  if (slot == "area") return "in the " + value;
  if (slot == "pricerange") return "in the " + value + " price range";
  if (slot == "type") return "of type " + value;
  if (slot == "internet") return value == "yes" ? "with free wifi" : "without wifi";
  if (slot == "parking") return value == "yes" ? "with free parking" : "without parking";
  if (slot == "stars") return "with " + value + " stars";
  if (slot == "food") return "serving " + value + " food";
  if (slot == "departure") return "from " + value;
  if (slot == "destination") return "to " + value;
  if (slot == "day") return "on " + value;
  if (slot == "leaveat") return "leaving at " + value;
  if (slot == "arriveby") return "arriving by " + value;
  return slot + " " + value;
}

std::string Join(const std::vector<std::string> &parts, const std::string &sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string Phrases(const Pairs &pairs) {
  std::vector<std::string> parts;
  for (const auto &[slot, value] : pairs) parts.push_back(Phrase(slot, value));
  return Join(parts, " and ");
}

// Picks `count` distinct entries of `pool` in pool order.
std::vector<std::string> Subset(Rng &rng, std::vector<std::string> pool, size_t count) {
  std::vector<size_t> order(pool.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (size_t i = 0; i < count && i < order.size(); ++i) {
    std::swap(order[i], order[i + UniformBelow(rng, order.size() - i)]);
  }
  order.resize(std::min(count, order.size()));
  std::sort(order.begin(), order.end());
  std::vector<std::string> out;
  for (size_t i : order) out.push_back(pool[i]);
  return out;
}

struct Segment {
  std::string domain;
  Pairs constraints;
  Pairs booking;
  std::vector<std::string> requests;
};

class DialogBuilder {
 public:
  explicit DialogBuilder(Dialog *dialog) : dialog_(dialog) {}

  void Add(const std::string &user, std::vector<DialogAct> acts,
           const std::string &response) {
    Turn turn;
    turn.user = user;
    turn.system.state = state_;
    turn.system.acts = std::move(acts);
    turn.system.response = response;
    dialog_->turns.push_back(std::move(turn));
  }

  void Inform(const std::string &domain, const Pairs &pairs) {
    for (const auto &[slot, value] : pairs) state_.Set(domain, slot, value);
  }

 private:
  Dialog *dialog_;
  BeliefState state_;
};

DialogAct Act(const std::string &domain, const std::string &act,
              std::optional<std::string> slot = std::nullopt) {
  return DialogAct{domain, act, std::move(slot)};
}

void BuildSegment(const Segment &segment, bool first, DialogBuilder *builder) {
  const std::string &d = segment.domain;
  const std::string opener = first ? "i am looking for " : "i also need ";
  const std::string article = d == "attraction" ? "an " : "a ";
  if (d == "taxi") {
    builder->Inform(d, segment.constraints);
    builder->Add(opener + "a taxi " + Phrases(segment.constraints) + " .",
                 {Act(d, "inform", "type"), Act(d, "inform", "phone")},
                 "i have booked a [taxi_type] for you , the contact number is "
                 "[taxi_phone] .");
    return;
  }
  const std::string key_slot = d == "train" ? "id" : "name";
  const Pairs &all = segment.constraints;
  size_t split = all.size() >= 2 ? all.size() / 2 : 0;
  if (split > 0) {
    Pairs head(all.begin(), all.begin() + static_cast<long>(split));
    builder->Inform(d, head);
    const std::string &missing = all[split].first;
    builder->Add(opener + article + d + " " + Phrases(head) + " .",
                 {Act(d, "request", missing)},
                 "sure , do you have a preference for the " + missing + " ?");
  }
  Pairs tail(all.begin() + static_cast<long>(split), all.end());
  builder->Inform(d, tail);
  const std::string key = Placeholder(d, key_slot);
  std::string user = (split > 0 ? std::string("i would like it ") : opener + article + d + " ") +
                     Phrases(tail) + " .";
  if (d == "train") {
    builder->Add(user, {Act(d, "inform", "id"), Act(d, "inform", "leaveat")},
                 key + " leaves at [train_leaveat] and arrives by [train_arriveby] .");
  } else {
    builder->Add(user, {Act(d, "recommend", key_slot)},
                 "i would recommend " + key + " .");
  }
  if (!segment.requests.empty()) {
    std::vector<std::string> asked, told;
    std::vector<DialogAct> acts;
    for (const auto &slot : segment.requests) {
      asked.push_back("the " + slot);
      told.push_back("the " + slot + " is " + Placeholder(d, slot));
      acts.push_back(Act(d, "inform", slot));
    }
    builder->Add("could you tell me " + Join(asked, " and ") + " ?", std::move(acts),
                 Join(told, " and ") + " .");
  }
  if (!segment.booking.empty()) {
    builder->Inform(d, segment.booking);
    std::vector<std::string> parts;
    for (const auto &[slot, value] : segment.booking) {
      parts.push_back(slot.substr(4) + " " + value);
    }
    builder->Add("please book it for " + Join(parts, " , ") + " .",
                 {Act("booking " + d, "book", "ref")},
                 "booking was successful . the reference number is " +
                     Placeholder(d, "ref") + " .");
  }
}

Segment MakeSegment(Rng &rng, const std::string &domain,
                    const std::map<std::string, std::vector<Entity>> &tables) {
  Segment segment;
  segment.domain = domain;
  auto fill = [&](const Entity &target, const std::vector<std::string> &slots) {
    for (const auto &slot : slots) segment.constraints.emplace_back(slot, target.at(slot));
  };
  if (domain == "hotel") {
    const Entity &e = tables.at("hotel")[UniformBelow(rng, tables.at("hotel").size())];
    fill(e, Subset(rng, {"area", "pricerange", "type", "internet", "parking", "stars"},
                   2 + UniformBelow(rng, 2)));
    segment.requests = Subset(rng, {"address", "phone", "postcode", "price"},
                              UniformBelow(rng, 3));
    if (Chance(rng, 0.5)) {
      segment.booking = {{"bookday", Pick(rng, kDays)},
                         {"bookpeople", std::to_string(1 + UniformBelow(rng, 6))},
                         {"bookstay", std::to_string(1 + UniformBelow(rng, 5))}};
    }
  } else if (domain == "restaurant") {
    const Entity &e =
        tables.at("restaurant")[UniformBelow(rng, tables.at("restaurant").size())];
    fill(e, Subset(rng, {"area", "pricerange", "food"}, 2 + UniformBelow(rng, 2)));
    segment.requests = Subset(rng, {"address", "phone", "postcode"}, UniformBelow(rng, 3));
    if (Chance(rng, 0.5)) {
      segment.booking = {{"bookday", Pick(rng, kDays)},
                         {"bookpeople", std::to_string(1 + UniformBelow(rng, 6))},
                         {"booktime", Clock(11 * 60 + 30 * static_cast<int>(UniformBelow(rng, 20)))}};
    }
  } else if (domain == "attraction") {
    const Entity &e =
        tables.at("attraction")[UniformBelow(rng, tables.at("attraction").size())];
    fill(e, Subset(rng, {"area", "type"}, 1 + UniformBelow(rng, 2)));
    segment.requests = Subset(rng, {"address", "phone", "postcode", "entrancefee"},
                              1 + UniformBelow(rng, 2));
  } else if (domain == "train") {
    const Entity &e = tables.at("train")[UniformBelow(rng, tables.at("train").size())];
    fill(e, {"departure", "destination", "day",
             Chance(rng, 0.5) ? "leaveat" : "arriveby"});
    segment.requests = Subset(rng, {"price", "duration"}, UniformBelow(rng, 3));
    if (Chance(rng, 0.5)) {
      segment.booking = {{"bookpeople", std::to_string(1 + UniformBelow(rng, 6))}};
    }
  } else {
    std::string from = Pick(rng, kTaxiPlaces), to;
    do {
      to = Pick(rng, kTaxiPlaces);
    } while (to == from);
    segment.constraints = {{"departure", from},
                           {"destination", to},
                           {"leaveat", Clock(8 * 60 + 15 * static_cast<int>(UniformBelow(rng, 48)))}};
    segment.requests = Subset(rng, {"phone", "type"}, 1 + UniformBelow(rng, 2));
  }
  // Goal slots in a fixed order make verbalized states stable.
  std::sort(segment.constraints.begin(), segment.constraints.end());
  return segment;
}

}  // namespace

Ontology SyntheticOntology() {
  Ontology ontology;
  DomainSchema hotel;
  hotel.informable = {"area", "internet", "name", "parking", "pricerange", "stars", "type"};
  hotel.book = {"bookday", "bookpeople", "bookstay"};
  hotel.requestable = {"address", "phone", "postcode", "price", "ref"};
  hotel.acts = {"inform", "request", "recommend", "nooffer", "select"};
  ontology.AddDomain("hotel", hotel);

  DomainSchema restaurant;
  restaurant.informable = {"area", "food", "name", "pricerange"};
  restaurant.book = {"bookday", "bookpeople", "booktime"};
  restaurant.requestable = {"address", "phone", "postcode", "ref"};
  restaurant.acts = hotel.acts;
  ontology.AddDomain("restaurant", restaurant);

  DomainSchema attraction;
  attraction.informable = {"area", "name", "type"};
  attraction.requestable = {"address", "entrancefee", "phone", "postcode"};
  attraction.acts = {"inform", "request", "recommend", "nooffer", "select"};
  ontology.AddDomain("attraction", attraction);

  DomainSchema train;
  train.informable = {"arriveby", "day", "departure", "destination", "id", "leaveat"};
  train.book = {"bookpeople"};
  train.requestable = {"duration", "price", "ref"};
  train.acts = {"inform", "request", "offerbook", "nooffer", "select"};
  train.key_slot = "id";
  ontology.AddDomain("train", train);

  DomainSchema taxi;
  taxi.informable = {"arriveby", "departure", "destination", "leaveat"};
  taxi.requestable = {"phone", "type"};
  taxi.acts = {"inform", "request"};
  taxi.entity_bearing = false;
  ontology.AddDomain("taxi", taxi);

  ontology.AddActDomain("booking", {"book", "inform", "nobook", "request"});
  ontology.AddActDomain("general", {"bye", "greet", "reqmore", "welcome"});
  return ontology;
}

Database SyntheticDatabase(const SyntheticOptions &options) {
  return Database(SyntheticOntology(), Tables(options));
}

Corpus SyntheticCorpus(const SyntheticOptions &options) {
  auto tables = Tables(options);
  Corpus corpus;
  corpus.db = Database(SyntheticOntology(), tables);
  Rng rng(MixSeed(options.seed, 0xd1a1));
  const std::vector<std::string> leads = {"hotel", "restaurant", "attraction", "train"};
  const std::vector<std::string> seconds = {"hotel", "restaurant", "attraction", "train", "taxi"};
  for (size_t i = 0; i < options.dialogs; ++i) {
    char id[64];
    std::snprintf(id, sizeof(id), "%s-%05zu", options.id_prefix.c_str(), i);
    Dialog dialog;
    dialog.id = id;
    dialog.goal_id = id;
    std::vector<std::string> domains = {Pick(rng, leads)};
    if (options.max_domains >= 2 && Chance(rng, 0.5)) {
      std::string second;
      do {
        second = Pick(rng, seconds);
      } while (second == domains[0]);
      domains.push_back(second);
    }
    UserGoal goal;
    goal.id = id;
    DialogBuilder builder(&dialog);
    for (size_t d = 0; d < domains.size(); ++d) {
      Segment segment = MakeSegment(rng, domains[d], tables);
      DomainGoal &domain_goal = goal.domains[segment.domain];
      for (const auto &[slot, value] : segment.constraints) domain_goal.constraints[slot] = value;
      for (const auto &[slot, value] : segment.booking) domain_goal.constraints[slot] = value;
      domain_goal.requests.insert(segment.requests.begin(), segment.requests.end());
      BuildSegment(segment, d == 0, &builder);
    }
    builder.Add("thank you , that is all i need .", {Act("general", "bye")},
                "you are welcome . goodbye .");
    corpus.goals.emplace(goal.id, std::move(goal));
    corpus.dialogs.push_back(std::move(dialog));
  }
  ValidateCorpus(corpus);
  return corpus;
}

}  // namespace subgoal
