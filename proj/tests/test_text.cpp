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

#include <catch2/catch_amalgamated.hpp>

#include "radrq/text.hpp"

using namespace radrq;

TEST_CASE("tokenize lowercases and records offsets") {
  const auto toks = tokenize("Mild Opacity, RIGHT lung.");
  REQUIRE(toks.size() == 4);
  CHECK(toks[0].text == "mild");
  CHECK(toks[0].begin == 0);
  CHECK(toks[0].end == 4);
  CHECK(toks[1].text == "opacity");
  CHECK(toks[1].begin == 5);
  CHECK(toks[1].end == 12);
  CHECK(toks[2].text == "right");
  CHECK(toks[3].text == "lung");
  CHECK(toks[3].end == 24);
}

TEST_CASE("tokenize keeps digits inside words") {
  const auto toks = tokenize("t2 lesion at c5-c6");
  REQUIRE(toks.size() == 5);
  CHECK(toks[0].text == "t2");
  CHECK(toks[2].text == "at");
  CHECK(toks[3].text == "c5");
  CHECK(toks[4].text == "c6");
}

TEST_CASE("tokenize of empty and punctuation-only input") {
  CHECK(tokenize("").empty());
  CHECK(tokenize(" ,;.! ").empty());
}

TEST_CASE("split_sentences splits on terminators") {
  const auto sents = split_sentences("No effusion. Mild edema!\nHeart normal? Lungs clear.");
  REQUIRE(sents.size() == 4);
  CHECK(sents[0].text == "No effusion");
  CHECK(sents[1].text == " Mild edema");
  CHECK(sents[2].text == "Heart normal");
  CHECK(sents[3].text == " Lungs clear");
}

TEST_CASE("split_sentences drops segments without alphabetic tokens") {
  const auto sents = split_sentences("...  . 123. Opacity seen. ");
  REQUIRE(sents.size() == 1);
  CHECK(sents[0].tokens.size() == 2);
  CHECK(sents[0].tokens[0].text == "opacity");
}

TEST_CASE("split_sentences token offsets are sentence-local") {
  const auto sents = split_sentences("First one. Left lung clear.");
  REQUIRE(sents.size() == 2);
  const Sentence& s = sents[1];
  REQUIRE(s.tokens.size() == 3);
  CHECK(s.tokens[0].text == "left");
  CHECK(s.text.substr(s.tokens[0].begin, s.tokens[0].end - s.tokens[0].begin) == "Left");
  CHECK(s.text.substr(s.tokens[2].begin, s.tokens[2].end - s.tokens[2].begin) == "clear");
}

TEST_CASE("split_sentences keeps text without trailing terminator") {
  const auto sents = split_sentences("No pneumothorax");
  REQUIRE(sents.size() == 1);
  CHECK(sents[0].tokens.size() == 2);
}
