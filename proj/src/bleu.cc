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

#include "subgoal/bleu.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>

#include "subgoal/errors.h"
#include "subgoal/text.h"

namespace subgoal {

namespace {

constexpr int kMaxOrder = 4;

bool IsPlaceholderChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

// Length of a "[xxx_yyy]" placeholder starting at `pos`, or 0.
size_t PlaceholderLength(std::string_view s, size_t pos) {
  if (s[pos] != '[') return 0;
  size_t end = pos + 1;
  while (end < s.size() && IsPlaceholderChar(s[end])) ++end;
  if (end == pos + 1 || end >= s.size() || s[end] != ']') return 0;
  return end - pos + 1;
}

using NgramCounts = std::map<std::vector<std::string_view>, int>;

NgramCounts CountNgrams(const std::vector<std::string> &tokens, int n) {
  NgramCounts counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    std::vector<std::string_view> gram(tokens.begin() + i,
                                       tokens.begin() + i + n);
    ++counts[gram];
  }
  return counts;
}

}  // namespace

std::vector<std::string> TokenizeForBleu(std::string_view text) {
  std::string lowered = ToLower(text);
  std::vector<std::string> tokens;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) tokens.push_back(std::move(word));
    word.clear();
  };
  for (size_t i = 0; i < lowered.size();) {
    char c = lowered[i];
    if (size_t len = PlaceholderLength(lowered, i); len > 0) {
      flush();
      tokens.push_back(lowered.substr(i, len));
      i += len;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
      ++i;
    } else if (std::ispunct(static_cast<unsigned char>(c))) {
      flush();
      tokens.emplace_back(1, c);
      ++i;
    } else {
      word.push_back(c);
      ++i;
    }
  }
  flush();
  return tokens;
}

double CorpusBleu(const std::vector<std::string> &hypotheses,
                  const std::vector<std::string> &references) {
  if (hypotheses.size() != references.size()) {
    throw LengthMismatch("BLEU: " + std::to_string(hypotheses.size()) +
                         " hypotheses vs " + std::to_string(references.size()) +
                         " references");
  }
  std::array<double, kMaxOrder> matches{};
  std::array<double, kMaxOrder> totals{};
  double hyp_length = 0;
  double ref_length = 0;
  for (size_t i = 0; i < hypotheses.size(); ++i) {
    auto hyp = TokenizeForBleu(hypotheses[i]);
    auto ref = TokenizeForBleu(references[i]);
    hyp_length += static_cast<double>(hyp.size());
    ref_length += static_cast<double>(ref.size());
    for (int n = 1; n <= kMaxOrder; ++n) {
      NgramCounts hyp_counts = CountNgrams(hyp, n);
      NgramCounts ref_counts = CountNgrams(ref, n);
      for (const auto &[gram, count] : hyp_counts) {
        auto it = ref_counts.find(gram);
        if (it != ref_counts.end()) {
          matches[n - 1] += std::min(count, it->second);
        }
        totals[n - 1] += count;
      }
    }
  }
  if (hyp_length == 0) return 0.0;
  double log_precision = 0;
  for (int n = 0; n < kMaxOrder; ++n) {
    double numerator = matches[n] > 0 ? matches[n] : kBleuEpsilon;
    double denominator = std::max(totals[n], 1.0);
    log_precision += std::log(numerator / denominator) / kMaxOrder;
  }
  double brevity =
      hyp_length > ref_length ? 1.0 : std::exp(1.0 - ref_length / hyp_length);
  return 100.0 * brevity * std::exp(log_precision);
}

}  // namespace subgoal
