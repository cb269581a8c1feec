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
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "radrq/atlas.hpp"
#include "radrq/extract.hpp"
#include "radrq/grounding.hpp"
#include "radrq/lexical.hpp"
#include "radrq/lexicon.hpp"

namespace radrq {

// Round to three decimals with exact halves going down, so 0.4635 -> 0.463.
// Adding 0.0 normalizes a negative zero.
inline double round3(double x) {
  return std::ceil(x * 1000.0 - 0.5) / 1000.0 + 0.0;
}

// Order-independent mean: summands are sorted before accumulation.
inline double stable_mean(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("mean of empty range");
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (const double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

struct ScoreOptions {
  std::size_t negation_window = 6;
};

struct SideDiagnostics {
  std::size_t n_patterns = 0;
  std::size_t n_grounded = 0;
  std::size_t n_skipped = 0;
};

struct PairScore {
  std::string image_id;
  std::array<LexicalScore, 3> lexical{};  // indexed by Granularity
  double miou = 0.0;
  double rq = 0.0;
  SideDiagnostics gt;
  SideDiagnostics pred;
};

inline PairScore rq_pair(const std::string& ground_truth, const std::string& prediction,
                         const std::string& image_id, const Lexicon& lexicon,
                         const RegionAtlas& atlas, const ScoreOptions& options = {}) {
  ExtractOptions ex;
  ex.negation_window = options.negation_window;
  const auto gt_patterns = extract_ffl(ground_truth, lexicon, ex);
  const auto pred_patterns = extract_ffl(prediction, lexicon, ex);

  PairScore s;
  s.image_id = image_id;
  for (const Granularity level : {Granularity::core, Granularity::anatomy, Granularity::all}) {
    s.lexical[static_cast<std::size_t>(level)] = lexical_score(gt_patterns, pred_patterns, level);
  }

  const auto gt_grounded = ground(gt_patterns, image_id, atlas, lexicon.catalog());
  const auto pred_grounded = ground(pred_patterns, image_id, atlas, lexicon.catalog());
  s.miou = miou(gt_grounded.grounded, pred_grounded.grounded);
  s.rq = (s.lexical[static_cast<std::size_t>(Granularity::anatomy)].f1 + s.miou) / 2.0;

  s.gt.n_patterns = gt_patterns.size();
  s.gt.n_grounded = gt_grounded.diagnostics.n_grounded;
  s.gt.n_skipped = gt_patterns.size() - gt_grounded.diagnostics.n_grounded;
  s.pred.n_patterns = pred_patterns.size();
  s.pred.n_grounded = pred_grounded.diagnostics.n_grounded;
  s.pred.n_skipped = pred_patterns.size() - pred_grounded.diagnostics.n_grounded;
  return s;
}

struct PairInput {
  std::string ground_truth;
  std::string prediction;
  std::string image_id;
};

struct CorpusScore {
  std::size_t n_pairs = 0;
  std::array<double, 3> mean_precision{};
  std::array<double, 3> mean_recall{};
  std::array<double, 3> mean_f1{};
  double mean_miou = 0.0;
  double mean_rq = 0.0;
};

inline CorpusScore corpus_from_pairs(const std::vector<PairScore>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("corpus score over zero pairs");
  CorpusScore c;
  c.n_pairs = pairs.size();
  for (std::size_t level = 0; level < 3; ++level) {
    std::vector<double> p, r, f;
    for (const PairScore& s : pairs) {
      p.push_back(s.lexical[level].precision);
      r.push_back(s.lexical[level].recall);
      f.push_back(s.lexical[level].f1);
    }
    c.mean_precision[level] = stable_mean(std::move(p));
    c.mean_recall[level] = stable_mean(std::move(r));
    c.mean_f1[level] = stable_mean(std::move(f));
  }
  std::vector<double> m, q;
  for (const PairScore& s : pairs) {
    m.push_back(s.miou);
    q.push_back(s.rq);
  }
  c.mean_miou = stable_mean(std::move(m));
  c.mean_rq = stable_mean(std::move(q));
  return c;
}

inline CorpusScore rq_corpus(const std::vector<PairInput>& inputs, const Lexicon& lexicon,
                             const RegionAtlas& atlas, const ScoreOptions& options = {}) {
  if (inputs.empty()) throw std::invalid_argument("corpus score over zero pairs");
  std::vector<PairScore> pairs;
  pairs.reserve(inputs.size());
  for (const PairInput& in : inputs) {
    pairs.push_back(rq_pair(in.ground_truth, in.prediction, in.image_id, lexicon, atlas, options));
  }
  return corpus_from_pairs(pairs);
}

}  // namespace radrq
