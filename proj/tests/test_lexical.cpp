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

#include "radrq/lexical.hpp"

using namespace radrq;

namespace {

FFLPattern make(const std::string& type, Polarity pol, const std::string& core,
                const std::string& anatomy = "", const std::string& laterality = "",
                const std::string& severity = "") {
  FFLPattern p;
  p.finding_type = type;
  p.polarity = pol;
  p.core_finding = core;
  p.anatomy = anatomy;
  p.laterality = laterality;
  p.severity = severity;
  return p;
}

}  // namespace

TEST_CASE("granularity names round-trip") {
  CHECK(to_string(Granularity::core) == "core");
  CHECK(to_string(Granularity::anatomy) == "anatomy");
  CHECK(to_string(Granularity::all) == "all");
  CHECK(granularity_from_string("core") == Granularity::core);
  CHECK(granularity_from_string("anatomy") == Granularity::anatomy);
  CHECK(granularity_from_string("all") == Granularity::all);
  CHECK_THROWS_AS(granularity_from_string("fine"), std::invalid_argument);
}

TEST_CASE("make_prefix blanks fields beyond the level") {
  const FFLPattern p =
      make("anatomicalfinding", Polarity::present, "opacity", "left lung", "left", "mild");
  const FFLPattern core = make_prefix(p, Granularity::core);
  CHECK(core.anatomy.empty());
  CHECK(core.laterality.empty());
  CHECK(core.severity.empty());
  CHECK(core.core_finding == "opacity");
  CHECK(core.sentence_index == -1);
  // The anatomy level keeps laterality alongside the location.
  const FFLPattern anat = make_prefix(p, Granularity::anatomy);
  CHECK(anat.anatomy == "left lung");
  CHECK(anat.laterality == "left");
  CHECK(anat.severity.empty());
  const FFLPattern all = make_prefix(p, Granularity::all);
  CHECK(all.laterality == "left");
  CHECK(all.severity == "mild");
  CHECK(all.sentence_index == -1);
}

TEST_CASE("two of three patterns shared") {
  const std::vector<FFLPattern> gt = {
      make("anatomicalfinding", Polarity::present, "opacity", "left lung"),
      make("anatomicalfinding", Polarity::absent, "pneumothorax", "lung", "bilateral"),
      make("disease", Polarity::present, "pneumonia", "right lung", "right"),
  };
  const std::vector<FFLPattern> pred = {
      gt[0],
      gt[1],
      make("device", Polarity::present, "pacemaker", "cardiac silhouette"),
  };
  for (const Granularity g : {Granularity::core, Granularity::anatomy, Granularity::all}) {
    const LexicalScore s = lexical_score(gt, pred, g);
    INFO("level " << to_string(g));
    CHECK(s.tp == 2);
    CHECK(s.fp == 1);
    CHECK(s.fn == 1);
    CHECK(s.precision == Catch::Approx(2.0 / 3.0));
    CHECK(s.recall == Catch::Approx(2.0 / 3.0));
    CHECK(s.f1 == Catch::Approx(2.0 / 3.0));
  }
}

TEST_CASE("empty prediction scores zero against findings") {
  const std::vector<FFLPattern> gt = {
      make("anatomicalfinding", Polarity::present, "opacity", "left lung")};
  const LexicalScore s = lexical_score(gt, {}, Granularity::all);
  CHECK(s.tp == 0);
  CHECK(s.fp == 0);
  CHECK(s.fn == 1);
  CHECK(s.precision == 0.0);
  CHECK(s.recall == 0.0);
  CHECK(s.f1 == 0.0);
}

TEST_CASE("two empty sides score one") {
  const LexicalScore s = lexical_score({}, {}, Granularity::core);
  CHECK(s.tp == 0);
  CHECK(s.fp == 0);
  CHECK(s.fn == 0);
  CHECK(s.precision == 1.0);
  CHECK(s.recall == 1.0);
  CHECK(s.f1 == 1.0);
}

TEST_CASE("coarser levels count collapsed duplicates as a multiset") {
  // Distinct at `anatomy` (laterality differs), identical at `core`.
  const std::vector<FFLPattern> gt = {
      make("anatomicalfinding", Polarity::present, "opacity", "lung", "left"),
      make("anatomicalfinding", Polarity::present, "opacity", "lung", "right"),
  };
  const std::vector<FFLPattern> pred = {
      make("anatomicalfinding", Polarity::present, "opacity", "lung", "left"),
      make("anatomicalfinding", Polarity::present, "opacity", "lung", "bilateral"),
  };
  const LexicalScore anat = lexical_score(gt, pred, Granularity::anatomy);
  CHECK(anat.tp == 1);
  CHECK(anat.fp == 1);
  CHECK(anat.fn == 1);
  // Both sides collapse to two copies of the same core-level prefix; the
  // multiset minimum counts both, where a set intersection would count one.
  const LexicalScore core = lexical_score(gt, pred, Granularity::core);
  CHECK(core.tp == 2);
  CHECK(core.fp == 0);
  CHECK(core.fn == 0);
  CHECK(core.f1 == 1.0);
}

TEST_CASE("multiset counting takes the minimum per key") {
  // Three gt copies collapse at core level against one pred copy.
  const std::vector<FFLPattern> gt = {
      make("anatomicalfinding", Polarity::present, "opacity", "left lung", "left"),
      make("anatomicalfinding", Polarity::present, "opacity", "right lung", "right"),
      make("anatomicalfinding", Polarity::present, "opacity", "lung", "bilateral"),
  };
  const std::vector<FFLPattern> pred = {
      make("anatomicalfinding", Polarity::present, "opacity", "lung", "bilateral"),
  };
  const LexicalScore core = lexical_score(gt, pred, Granularity::core);
  CHECK(core.tp == 1);
  CHECK(core.fp == 0);
  CHECK(core.fn == 2);
  CHECK(core.precision == 1.0);
  CHECK(core.recall == Catch::Approx(1.0 / 3.0));
}

TEST_CASE("exact duplicates on one side are removed first") {
  const FFLPattern a = make("anatomicalfinding", Polarity::present, "opacity", "lung");
  FFLPattern a2 = a;
  a2.sentence_index = 7;  // identity ignores the sentence index
  const LexicalScore s = lexical_score({a, a2, a}, {a}, Granularity::all);
  CHECK(s.tp == 1);
  CHECK(s.fp == 0);
  CHECK(s.fn == 0);
  CHECK(s.f1 == 1.0);
}

TEST_CASE("polarity distinguishes patterns at every level") {
  const FFLPattern present = make("anatomicalfinding", Polarity::present, "pneumothorax", "lung");
  const FFLPattern absent = make("anatomicalfinding", Polarity::absent, "pneumothorax", "lung");
  const LexicalScore s = lexical_score({present}, {absent}, Granularity::core);
  CHECK(s.tp == 0);
  CHECK(s.fp == 1);
  CHECK(s.fn == 1);
  CHECK(s.f1 == 0.0);
}

TEST_CASE("tp never grows when the level gets finer") {
  const std::vector<FFLPattern> gt = {
      make("anatomicalfinding", Polarity::present, "opacity", "lung", "left", "mild"),
      make("anatomicalfinding", Polarity::present, "opacity", "lung", "right", "severe"),
      make("anatomicalfinding", Polarity::absent, "pleural effusion", "costophrenic angle",
           "bilateral"),
      make("device", Polarity::present, "pacemaker", "cardiac silhouette"),
  };
  const std::vector<FFLPattern> pred = {
      make("anatomicalfinding", Polarity::present, "opacity", "lung", "left", "moderate"),
      make("anatomicalfinding", Polarity::present, "opacity", "left lung", "left", "severe"),
      make("anatomicalfinding", Polarity::absent, "pleural effusion", "costophrenic angle",
           "bilateral"),
      make("device", Polarity::present, "pacemaker", "mediastinum"),
  };
  const LexicalScore core = lexical_score(gt, pred, Granularity::core);
  const LexicalScore anat = lexical_score(gt, pred, Granularity::anatomy);
  const LexicalScore all = lexical_score(gt, pred, Granularity::all);
  CHECK(core.tp >= anat.tp);
  CHECK(anat.tp >= all.tp);
  CHECK(core.tp == 4);
  CHECK(anat.tp == 2);
  CHECK(all.tp == 1);
}
