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

#include "radrq/extract.hpp"
#include "radrq/grounding.hpp"

using namespace radrq;

namespace {

const Lexicon& cxr_lexicon() {
  static const Lexicon lex = Lexicon::load(std::string(RADRQ_DATA_DIR) + "/lexicon_cxr.json");
  return lex;
}

const RegionAtlas& demo_atlas() {
  static const RegionAtlas atlas =
      RegionAtlas::load(std::string(RADRQ_DATA_DIR) + "/atlas_demo.json", cxr_lexicon().catalog());
  return atlas;
}

GroundedPattern grounded(const std::string& type, Polarity pol, const std::string& core,
                         std::vector<BBox> boxes) {
  GroundedPattern g;
  g.pattern.finding_type = type;
  g.pattern.polarity = pol;
  g.pattern.core_finding = core;
  g.boxes = std::move(boxes);
  return g;
}

}  // namespace

TEST_CASE("grounding maps anatomy through the catalog to atlas boxes") {
  const auto patterns =
      extract_ffl("Mild opacity in the left lower lobe. No pleural effusion.", cxr_lexicon());
  REQUIRE(patterns.size() == 2);
  const auto result = ground(patterns, "demo-0001", demo_atlas(), cxr_lexicon().catalog());
  CHECK(result.diagnostics.n_input == 2);
  CHECK(result.diagnostics.n_grounded == 2);
  REQUIRE(result.grounded.size() == 2);
  // left lower lobe resolves through the laterality map to one zone box.
  CHECK(result.grounded[0].pattern.core_finding == "opacity");
  CHECK(result.grounded[0].boxes.size() == 1);
  CHECK(result.grounded[0].boxes[0] ==
        demo_atlas().image("demo-0001").at("left lower lung zone"));
  // bilateral costophrenic angles resolve to both side boxes.
  CHECK(result.grounded[1].pattern.core_finding == "pleural effusion");
  REQUIRE(result.grounded[1].boxes.size() == 2);
  CHECK(result.grounded[1].boxes[0] ==
        demo_atlas().image("demo-0001").at("left costophrenic angle"));
  CHECK(result.grounded[1].boxes[1] ==
        demo_atlas().image("demo-0001").at("right costophrenic angle"));
}

TEST_CASE("patterns without anatomy are tallied and skipped") {
  const auto patterns = extract_ffl(
      "No focal consolidation but there is a small effusion. Hyperinflation.", cxr_lexicon());
  REQUIRE(patterns.size() == 3);
  const auto result = ground(patterns, "demo-0004", demo_atlas(), cxr_lexicon().catalog());
  CHECK(result.diagnostics.n_input == 3);
  CHECK(result.diagnostics.n_grounded == 2);
  CHECK(result.diagnostics.skipped_no_anatomy == 1);
  CHECK(result.diagnostics.skipped_unresolvable == 0);
  CHECK(result.diagnostics.skipped_missing_region == 0);
}

TEST_CASE("unknown image id is an error") {
  CHECK_THROWS_WITH(ground({}, "nope-0000", demo_atlas(), cxr_lexicon().catalog()),
                    Catch::Matchers::ContainsSubstring("unknown atlas image id"));
}

TEST_CASE("regions absent from the image are tallied per pattern") {
  RegionAtlas atlas;
  atlas.add_image("sparse", {{"left lung", BBox{0, 0, 10, 10}}});
  FFLPattern p;
  p.finding_type = "anatomicalfinding";
  p.polarity = Polarity::present;
  p.core_finding = "opacity";
  p.anatomy = "lung";
  p.laterality = "left";
  FFLPattern bilateral = p;
  bilateral.laterality = "bilateral";  // needs the missing right lung box
  const auto result = ground({p, bilateral}, "sparse", atlas, cxr_lexicon().catalog());
  CHECK(result.diagnostics.n_grounded == 1);
  CHECK(result.diagnostics.skipped_missing_region == 1);
  REQUIRE(result.grounded.size() == 1);
  CHECK(result.grounded[0].pattern.laterality == "left");
}

TEST_CASE("unresolvable anatomy is tallied") {
  FFLPattern p;
  p.finding_type = "anatomicalfinding";
  p.polarity = Polarity::present;
  p.core_finding = "opacity";
  p.anatomy = "nowhere";
  const auto result = ground({p}, "demo-0001", demo_atlas(), cxr_lexicon().catalog());
  CHECK(result.diagnostics.skipped_unresolvable == 1);
  CHECK(result.grounded.empty());
}

TEST_CASE("matching pairs only share-identity patterns") {
  const BBox box{0, 0, 10, 10};
  SECTION("polarity mismatch leaves no edge") {
    const auto gt = grounded("anatomicalfinding", Polarity::present, "opacity", {box});
    const auto pred = grounded("anatomicalfinding", Polarity::absent, "opacity", {box});
    const Matching m = max_weight_matching(std::vector<GroundedPattern>{gt},
                                           std::vector<GroundedPattern>{pred});
    CHECK(m.pairs.empty());
    CHECK(miou({gt}, {pred}) == 0.0);
  }
  SECTION("core mismatch leaves no edge") {
    const auto gt = grounded("anatomicalfinding", Polarity::present, "opacity", {box});
    const auto pred = grounded("anatomicalfinding", Polarity::present, "consolidation", {box});
    const Matching m = max_weight_matching(std::vector<GroundedPattern>{gt},
                                           std::vector<GroundedPattern>{pred});
    CHECK(m.pairs.empty());
  }
  SECTION("identical identity pairs at the box iou") {
    const auto gt = grounded("anatomicalfinding", Polarity::present, "opacity", {box});
    const auto pred =
        grounded("anatomicalfinding", Polarity::present, "opacity", {BBox{5, 5, 15, 15}});
    const Matching m = max_weight_matching(std::vector<GroundedPattern>{gt},
                                           std::vector<GroundedPattern>{pred});
    REQUIRE(m.pairs.size() == 1);
    CHECK(m.pairs[0].weight == Catch::Approx(25.0 / 175.0));
    CHECK(miou({gt}, {pred}) == Catch::Approx(25.0 / 175.0));
  }
}

TEST_CASE("miou conventions") {
  const auto g = grounded("anatomicalfinding", Polarity::present, "opacity", {BBox{0, 0, 1, 1}});
  CHECK(miou({}, {}) == 1.0);
  CHECK(miou({g}, {}) == 0.0);
  CHECK(miou({}, {g}) == 0.0);
  CHECK(miou({g}, {g}) == 1.0);
}

TEST_CASE("miou normalizes by both grounded sides") {
  const auto a = grounded("anatomicalfinding", Polarity::present, "opacity", {BBox{0, 0, 10, 10}});
  const auto b = grounded("anatomicalfinding", Polarity::absent, "pneumothorax",
                          {BBox{20, 20, 30, 30}});
  // Only the opacity pair matches, at iou 1; the pneumothorax stays unmatched.
  CHECK(miou({a, b}, {a}) == Catch::Approx(2.0 * 1.0 / 3.0));
}
