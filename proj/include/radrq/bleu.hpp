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

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "radrq/text.hpp"

namespace radrq {

struct BleuScore {
  double score = 0.0;
  std::array<double, 4> precisions{};  // unused orders stay 0
  double brevity_penalty = 0.0;
  std::size_t max_order = 0;  // highest n-gram order with any candidate n-grams
  std::size_t candidate_length = 0;
  std::size_t reference_length = 0;
};

// Corpus BLEU-4 without smoothing: clipped n-gram matches and totals pool
// across added pairs; a single pair gives sentence BLEU.
class BleuAccumulator {
 public:
  void add(std::string_view candidate, const std::vector<std::string>& references) {
    const auto cand = token_texts(candidate);
    if (cand.empty()) throw std::invalid_argument("BLEU candidate has no tokens");
    std::vector<std::vector<std::string>> refs;
    for (const std::string& r : references) {
      auto toks = token_texts(r);
      if (!toks.empty()) refs.push_back(std::move(toks));
    }
    if (refs.empty()) {
      throw std::invalid_argument("BLEU needs at least one non-empty reference");
    }

    candidate_length_ += cand.size();
    std::size_t closest = refs.front().size();
    for (const auto& r : refs) {
      if (length_gap(r.size(), cand.size()) < length_gap(closest, cand.size()) ||
          (length_gap(r.size(), cand.size()) == length_gap(closest, cand.size()) &&
           r.size() < closest)) {
        closest = r.size();
      }
    }
    reference_length_ += closest;

    for (std::size_t n = 1; n <= 4; ++n) {
      if (cand.size() < n) break;
      const auto cand_counts = ngram_counts(cand, n);
      std::map<std::string, std::size_t> clip;
      for (const auto& r : refs) {
        for (const auto& [gram, count] : ngram_counts(r, n)) {
          auto& c = clip[gram];
          if (count > c) c = count;
        }
      }
      for (const auto& [gram, count] : cand_counts) {
        const auto it = clip.find(gram);
        if (it != clip.end()) matched_[n - 1] += std::min(count, it->second);
      }
      total_[n - 1] += cand.size() - n + 1;
    }
    ++n_pairs_;
  }

  BleuScore finalize() const {
    if (n_pairs_ == 0) throw std::logic_error("BLEU over zero pairs");
    BleuScore s;
    s.candidate_length = candidate_length_;
    s.reference_length = reference_length_;
    s.brevity_penalty =
        candidate_length_ > reference_length_
            ? 1.0
            : std::exp(1.0 - static_cast<double>(reference_length_) /
                                 static_cast<double>(candidate_length_));
    double log_sum = 0.0;
    bool any_zero = false;
    std::size_t used = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      if (total_[n - 1] == 0) continue;
      const double p =
          static_cast<double>(matched_[n - 1]) / static_cast<double>(total_[n - 1]);
      s.precisions[n - 1] = p;
      ++used;
      if (p == 0.0) {
        any_zero = true;
      } else {
        log_sum += std::log(p);
      }
    }
    s.max_order = used;
    s.score = any_zero ? 0.0 : s.brevity_penalty * std::exp(log_sum / static_cast<double>(used));
    return s;
  }

  std::size_t n_pairs() const { return n_pairs_; }

 private:
  static std::vector<std::string> token_texts(std::string_view text) {
    std::vector<std::string> out;
    for (const Token& t : tokenize(text)) out.push_back(t.text);
    return out;
  }

  static std::size_t length_gap(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

  static std::map<std::string, std::size_t> ngram_counts(const std::vector<std::string>& tokens,
                                                         std::size_t n) {
    std::map<std::string, std::size_t> out;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      std::string gram;
      for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) gram += '\x1f';
        gram += tokens[i + k];
      }
      out[gram]++;
    }
    return out;
  }

  std::array<std::size_t, 4> matched_{};
  std::array<std::size_t, 4> total_{};
  std::size_t candidate_length_ = 0;
  std::size_t reference_length_ = 0;
  std::size_t n_pairs_ = 0;
};

inline BleuScore bleu(std::string_view candidate, const std::vector<std::string>& references) {
  BleuAccumulator acc;
  acc.add(candidate, references);
  return acc.finalize();
}

}  // namespace radrq
