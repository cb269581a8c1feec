// Copyright 2026 The radrq Authors.
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "radrq/pattern.hpp"

namespace radrq {

enum class Granularity { core = 0, anatomy = 1, all = 2 };

inline std::string to_string(Granularity g) {
  switch (g) {
    case Granularity::core: return "core";
    case Granularity::anatomy: return "anatomy";
    case Granularity::all: return "all";
  }
  return "?";
}

inline Granularity granularity_from_string(std::string_view s) {
  if (s == "core") return Granularity::core;
  if (s == "anatomy") return Granularity::anatomy;
  if (s == "all") return Granularity::all;
  throw std::invalid_argument("unknown granularity: " + std::string(s));
}

// Projection of a pattern onto a granularity level: fields beyond the level
// are blanked so equality compares only the retained prefix.
inline FFLPattern make_prefix(const FFLPattern& p, Granularity level) {
  FFLPattern out;
  out.finding_type = p.finding_type;
  out.polarity = p.polarity;
  out.core_finding = p.core_finding;
  if (level != Granularity::core) {
    out.anatomy = p.anatomy;
    out.laterality = p.laterality;
  }
  if (level == Granularity::all) out.severity = p.severity;
  out.sentence_index = -1;
  return out;
}

struct LexicalScore {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Precision, recall and F1 over level prefixes. Inputs are deduplicated as
// full patterns first; true positives count prefix multiset overlap.
// Two empty sides score 1.0 across the board, one empty side scores 0.0.
inline LexicalScore lexical_score(const std::vector<FFLPattern>& ground_truth,
                                  const std::vector<FFLPattern>& prediction,
                                  Granularity level) {
  const auto gt = dedupe_keep_first(ground_truth);
  const auto pred = dedupe_keep_first(prediction);

  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (const FFLPattern& p : gt) counts[to_pipe(make_prefix(p, level))].first++;
  for (const FFLPattern& p : pred) counts[to_pipe(make_prefix(p, level))].second++;

  LexicalScore s;
  for (const auto& [key, c] : counts) {
    (void)key;
    s.tp += std::min(c.first, c.second);
  }
  s.fp = pred.size() - s.tp;
  s.fn = gt.size() - s.tp;

  if (gt.empty() && pred.empty()) {
    s.precision = s.recall = s.f1 = 1.0;
    return s;
  }
  s.precision = pred.empty() ? 0.0 : static_cast<double>(s.tp) / static_cast<double>(pred.size());
  s.recall = gt.empty() ? 0.0 : static_cast<double>(s.tp) / static_cast<double>(gt.size());
  s.f1 = (s.precision + s.recall) > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

}  // namespace radrq
