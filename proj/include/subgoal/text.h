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

#ifndef SUBGOAL_TEXT_H_
#define SUBGOAL_TEXT_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace subgoal {

// ASCII lowercase; bytes outside ASCII pass through unchanged.
std::string ToLower(std::string_view s);
std::string ToUpper(std::string_view s);

std::string_view Trim(std::string_view s);

// Trims, lowercases and collapses internal whitespace runs to one space.
// This is the equality key for slot values.
std::string NormalizeValue(std::string_view s);

// Splits on whitespace, dropping empty pieces.
std::vector<std::string> SplitWhitespace(std::string_view s);

bool StartsWith(std::string_view s, std::string_view prefix);

// Stable 64-bit hashing used to derive seeds. Unlike std::hash the values
// are identical across platforms and standard libraries.
uint64_t Fnv1a64(std::string_view s);
uint64_t MixSeed(uint64_t a, uint64_t b);

// Maps a hash to [0, 1).
double UnitInterval(uint64_t h);

// Uniform integer in [0, bound) by rejection. Unlike
// std::uniform_int_distribution the result does not depend on the
// standard library. `bound` must be positive.
uint64_t UniformBelow(std::mt19937_64 &rng, uint64_t bound);

}  // namespace subgoal

#endif  // SUBGOAL_TEXT_H_
