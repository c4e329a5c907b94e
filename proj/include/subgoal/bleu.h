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

#ifndef SUBGOAL_BLEU_H_
#define SUBGOAL_BLEU_H_

#include <string>
#include <string_view>
#include <vector>

namespace subgoal {

// Smoothing numerator used when an n-gram order has no clipped match.
inline constexpr double kBleuEpsilon = 1e-9;

// Lowercases, splits punctuation characters off as separate tokens and
// splits on whitespace. Placeholders such as "[hotel_name]" stay one token.
std::vector<std::string> TokenizeForBleu(std::string_view text);

// Corpus-level BLEU-4 in [0, 100] with one reference per hypothesis,
// uniform weights and the standard brevity penalty. Orders without any
// clipped match contribute kBleuEpsilon instead of zeroing the score.
// Throws LengthMismatch if the lists differ in length.
double CorpusBleu(const std::vector<std::string> &hypotheses,
                  const std::vector<std::string> &references);

}  // namespace subgoal

#endif  // SUBGOAL_BLEU_H_
