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

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace radrq {

// One lowercase word token with [begin, end) character offsets into the text
// it came from.
struct Token {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// A sentence segment: its own text (terminator stripped) plus tokens whose
// offsets index into that text.
struct Sentence {
  std::string text;
  std::vector<Token> tokens;
};

inline bool is_word_char(char c) {
  const unsigned char u = static_cast<unsigned char>(c);
  return (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || (u >= '0' && u <= '9');
}

// Lowercases and splits on non-alphanumeric boundaries, preserving offsets.
inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_word_char(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    std::string word;
    while (j < text.size() && is_word_char(text[j])) {
      word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[j]))));
      ++j;
    }
    out.push_back(Token{std::move(word), i, j});
    i = j;
  }
  return out;
}

inline bool is_sentence_terminator(char c) {
  return c == '.' || c == '!' || c == '?' || c == '\n';
}

// Splits on ".", "!", "?" and newlines. Segments without an alphabetic token
// are dropped, so list markers like "1." yield no sentence of their own.
inline std::vector<Sentence> split_sentences(std::string_view text) {
  std::vector<Sentence> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool at_end = i == text.size();
    if (!at_end && !is_sentence_terminator(text[i])) continue;
    Sentence s;
    s.text.assign(text.substr(start, i - start));
    s.tokens = tokenize(s.text);
    bool has_alpha = false;
    for (const Token& t : s.tokens) {
      for (const char c : t.text) {
        if (c >= 'a' && c <= 'z') {
          has_alpha = true;
          break;
        }
      }
      if (has_alpha) break;
    }
    if (has_alpha) out.push_back(std::move(s));
    start = i + 1;
  }
  return out;
}

}  // namespace radrq
