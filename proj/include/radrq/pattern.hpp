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

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace radrq {

enum class Polarity { present, absent };

inline std::string to_string(Polarity p) {
  return p == Polarity::present ? "present" : "absent";
}

inline Polarity polarity_from_string(std::string_view s) {
  if (s == "present") return Polarity::present;
  if (s == "absent") return Polarity::absent;
  throw std::invalid_argument("unknown polarity: " + std::string(s));
}

// One fine-grained finding: type, polarity, core finding, and the anatomy /
// laterality / severity modifiers (empty string = not set). Identity is the
// six-field tuple; sentence_index is provenance only.
struct FFLPattern {
  std::string finding_type;
  Polarity polarity = Polarity::present;
  std::string core_finding;
  std::string anatomy;
  std::string laterality;
  std::string severity;
  int sentence_index = -1;

  auto key() const {
    return std::tie(finding_type, polarity, core_finding, anatomy, laterality,
                    severity);
  }
  friend bool operator==(const FFLPattern& a, const FFLPattern& b) {
    return a.key() == b.key();
  }
  friend bool operator<(const FFLPattern& a, const FFLPattern& b) {
    return a.key() < b.key();
  }
};

// "finding_type|polarity|core|anatomy|laterality|severity", empty fields kept.
inline std::string to_pipe(const FFLPattern& p) {
  std::string out;
  out += p.finding_type;
  out += '|';
  out += to_string(p.polarity);
  out += '|';
  out += p.core_finding;
  out += '|';
  out += p.anatomy;
  out += '|';
  out += p.laterality;
  out += '|';
  out += p.severity;
  return out;
}

inline FFLPattern from_pipe(std::string_view s) {
  std::vector<std::string> fields(1);
  for (const char c : s) {
    if (c == '|') {
      fields.emplace_back();
    } else {
      fields.back().push_back(c);
    }
  }
  if (fields.size() != 6) {
    throw std::invalid_argument("pattern string must have 6 pipe-separated fields: " +
                                std::string(s));
  }
  FFLPattern p;
  p.finding_type = std::move(fields[0]);
  p.polarity = polarity_from_string(fields[1]);
  p.core_finding = std::move(fields[2]);
  p.anatomy = std::move(fields[3]);
  p.laterality = std::move(fields[4]);
  p.severity = std::move(fields[5]);
  return p;
}

struct FFLPatternHash {
  std::size_t operator()(const FFLPattern& p) const {
    const std::hash<std::string> h;
    std::size_t x = h(p.finding_type);
    const auto mixin = [&x](std::size_t v) {
      x ^= v + 0x9e3779b97f4a7c15ULL + (x << 6) + (x >> 2);
    };
    mixin(static_cast<std::size_t>(p.polarity));
    mixin(h(p.core_finding));
    mixin(h(p.anatomy));
    mixin(h(p.laterality));
    mixin(h(p.severity));
    return x;
  }
};

// Order-preserving deduplication on the identity tuple.
inline std::vector<FFLPattern> dedupe_keep_first(const std::vector<FFLPattern>& in) {
  std::vector<FFLPattern> out;
  out.reserve(in.size());
  for (const FFLPattern& p : in) {
    bool seen = false;
    for (const FFLPattern& q : out) {
      if (q == p) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(p);
  }
  return out;
}

}  // namespace radrq
