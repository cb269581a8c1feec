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
#include <string_view>
#include <vector>

#include "radrq/lexicon.hpp"
#include "radrq/pattern.hpp"
#include "radrq/text.hpp"

namespace radrq {

struct ExtractOptions {
  std::size_t negation_window = 6;  // max tokens between cue end and finding start
};

// One lexicon term located in a sentence. Token and character offsets are
// sentence-local, end exclusive.
struct TermMention {
  const LexiconEntry* entry = nullptr;
  std::size_t tok_begin = 0;
  std::size_t tok_end = 0;
  std::size_t char_begin = 0;
  std::size_t char_end = 0;
};

// Greedy left-to-right longest-match scan; matched spans never overlap.
inline std::vector<TermMention> scan_terms(const Sentence& sentence, const Lexicon& lexicon) {
  std::vector<TermMention> out;
  std::size_t i = 0;
  while (i < sentence.tokens.size()) {
    if (const auto match = lexicon.lookup(sentence.tokens, i)) {
      TermMention m;
      m.entry = match->entry;
      m.tok_begin = i;
      m.tok_end = i + match->length;
      m.char_begin = sentence.tokens[i].begin;
      m.char_end = sentence.tokens[m.tok_end - 1].end;
      out.push_back(m);
      i = m.tok_end;
    } else {
      ++i;
    }
  }
  return out;
}

// True when some negation cue precedes the finding span within `window`
// tokens and nothing in between cuts the scope. Scope breakers are the
// tokens "but" and "however" and the characters ',' and ';'.
inline bool detect_negation(const Sentence& sentence, const std::vector<TermMention>& mentions,
                            std::size_t finding_tok_begin, std::size_t finding_char_begin,
                            std::size_t window) {
  for (const TermMention& cue : mentions) {
    if (cue.entry->category != TermCategory::negation_cue) continue;
    if (cue.tok_end > finding_tok_begin) continue;
    if (finding_tok_begin - cue.tok_end > window) continue;
    bool blocked = false;
    for (std::size_t t = cue.tok_end; t < finding_tok_begin && !blocked; ++t) {
      const std::string& w = sentence.tokens[t].text;
      blocked = (w == "but" || w == "however");
    }
    for (std::size_t c = cue.char_end; c < finding_char_begin && !blocked; ++c) {
      const char ch = sentence.text[c];
      blocked = (ch == ',' || ch == ';');
    }
    if (!blocked) return true;
  }
  return false;
}

inline Polarity detect_negation(const Sentence& sentence, const Lexicon& lexicon,
                                std::size_t span_tok_begin, std::size_t span_tok_end,
                                std::size_t window = 6) {
  (void)span_tok_end;
  if (span_tok_begin >= sentence.tokens.size()) {
    throw std::out_of_range("finding span starts past end of sentence");
  }
  const auto mentions = scan_terms(sentence, lexicon);
  const std::size_t char_begin = sentence.tokens[span_tok_begin].begin;
  return detect_negation(sentence, mentions, span_tok_begin, char_begin, window)
             ? Polarity::absent
             : Polarity::present;
}

namespace detail {

// Gap in tokens between two disjoint spans; 0 when adjacent or overlapping.
inline std::size_t span_distance(std::size_t a_begin, std::size_t a_end, std::size_t b_begin,
                                 std::size_t b_end) {
  if (a_end <= b_begin) return b_begin - a_end;
  if (b_end <= a_begin) return a_begin - b_end;
  return 0;
}

}  // namespace detail

// Full pipeline: sentence split, term scan, negation, nearest-core modifier
// attachment, completion rules, per-anatomy expansion, laterality and
// severity normalization, order-preserving dedupe.
inline std::vector<FFLPattern> extract_ffl(std::string_view report, const Lexicon& lexicon,
                                           const ExtractOptions& options = {}) {
  std::vector<FFLPattern> out;
  const auto sentences = split_sentences(report);
  for (std::size_t si = 0; si < sentences.size(); ++si) {
    const Sentence& sentence = sentences[si];
    const auto mentions = scan_terms(sentence, lexicon);

    std::vector<std::size_t> cores;
    for (std::size_t i = 0; i < mentions.size(); ++i) {
      if (mentions[i].entry->category == TermCategory::core_finding) cores.push_back(i);
    }
    if (cores.empty()) continue;

    // Each modifier joins the nearest core by token gap, earlier core on ties.
    struct Slots {
      std::vector<std::size_t> anatomies;
      std::vector<std::size_t> lateralities;
      std::vector<std::size_t> severities;
    };
    std::vector<Slots> slots(cores.size());
    for (std::size_t i = 0; i < mentions.size(); ++i) {
      const TermCategory cat = mentions[i].entry->category;
      if (cat == TermCategory::core_finding || cat == TermCategory::negation_cue) continue;
      std::size_t best = 0;
      std::size_t best_dist = 0;
      for (std::size_t c = 0; c < cores.size(); ++c) {
        const TermMention& cm = mentions[cores[c]];
        const std::size_t d = detail::span_distance(mentions[i].tok_begin, mentions[i].tok_end,
                                                    cm.tok_begin, cm.tok_end);
        if (c == 0 || d < best_dist) {
          best = c;
          best_dist = d;
        }
      }
      if (cat == TermCategory::anatomy) slots[best].anatomies.push_back(i);
      if (cat == TermCategory::laterality) slots[best].lateralities.push_back(i);
      if (cat == TermCategory::severity) slots[best].severities.push_back(i);
    }

    const auto nearest_value = [&](const std::vector<std::size_t>& attached,
                                   const TermMention& core) -> std::string {
      std::string value;
      std::size_t best_dist = 0;
      bool first = true;
      for (const std::size_t i : attached) {
        const std::size_t d = detail::span_distance(mentions[i].tok_begin, mentions[i].tok_end,
                                                    core.tok_begin, core.tok_end);
        if (first || d < best_dist) {
          value = mentions[i].entry->canonical_name;
          best_dist = d;
          first = false;
        }
      }
      return value;
    };

    for (std::size_t c = 0; c < cores.size(); ++c) {
      const TermMention& core = mentions[cores[c]];
      FFLPattern base;
      base.finding_type = core.entry->finding_type;
      base.core_finding = core.entry->canonical_name;
      base.polarity = detect_negation(sentence, mentions, core.tok_begin, core.char_begin,
                                      options.negation_window)
                          ? Polarity::absent
                          : Polarity::present;
      base.laterality = nearest_value(slots[c].lateralities, core);
      base.severity = nearest_value(slots[c].severities, core);
      base.sentence_index = static_cast<int>(si);

      std::vector<FFLPattern> expanded;
      if (slots[c].anatomies.empty()) {
        FFLPattern p = base;
        if (const CompletionRule* rule = lexicon.completion_for(p.core_finding)) {
          p.anatomy = rule->default_anatomy;
          if (p.laterality.empty()) p.laterality = rule->default_laterality;
        }
        expanded.push_back(std::move(p));
      } else {
        for (const std::size_t a : slots[c].anatomies) {
          FFLPattern p = base;
          p.anatomy = mentions[a].entry->canonical_name;
          expanded.push_back(std::move(p));
        }
      }
      for (FFLPattern& p : expanded) {
        if (p.laterality.empty() && !p.anatomy.empty()) {
          p.laterality = lexicon.intrinsic_laterality(p.anatomy);
        }
        if (p.polarity == Polarity::absent) p.severity.clear();
        out.push_back(std::move(p));
      }
    }
  }
  return dedupe_keep_first(out);
}

}  // namespace radrq
