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

#ifndef SUBGOAL_SYNTHETIC_H_
#define SUBGOAL_SYNTHETIC_H_

#include <cstdint>
#include <string>

#include "subgoal/corpus.h"

namespace subgoal {

// Generator of small, self-consistent corpora in the five-domain travel
// setting (hotel, restaurant, attraction, train, taxi). Every generated
// ground-truth dialog is successful under its goal.
struct SyntheticOptions {
  size_t dialogs = 100;
  uint64_t seed = 0;
  size_t hotels = 30;
  size_t restaurants = 40;
  size_t attractions = 30;
  size_t trains = 120;
  // Goals span one or two domains; 1 keeps every goal single-domain.
  int max_domains = 2;
  std::string id_prefix = "syn";
};

Ontology SyntheticOntology();
Database SyntheticDatabase(const SyntheticOptions &options);
// Dialog ids are "<prefix>-NNNNN"; each dialog has its own goal, whose id
// equals the dialog id.
Corpus SyntheticCorpus(const SyntheticOptions &options);

}  // namespace subgoal

#endif  // SUBGOAL_SYNTHETIC_H_
