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

#include <string>
#include <vector>

namespace fixtures {

// Hand-worked extraction cases: report text and the exact pipe-form pattern
// list it must produce, in order.
struct ExtractFixture {
  const char* name;
  const char* text;
  std::vector<std::string> expected;
};

inline const std::vector<ExtractFixture>& negation() {
  static const std::vector<ExtractFixture> cases = {
      {"plain_cue",
       "No pleural effusion.",
       {"anatomicalfinding|absent|pleural effusion|costophrenic angle|bilateral|"}},
      {"multiword_cue",
       "No evidence of pneumothorax.",
       {"anatomicalfinding|absent|pneumothorax|lung|bilateral|"}},
      {"cue_with_gap",
       "There is no focal consolidation.",
       {"anatomicalfinding|absent|consolidation|||"}},
      {"but_cuts_scope",
       "No acute fracture, but there is a small effusion.",
       {"anatomicalfinding|absent|fracture|||",
        "anatomicalfinding|present|pleural effusion|costophrenic angle|bilateral|mild"}},
      {"without_cue",
       "Lungs are clear without evidence of pneumonia.",
       {"disease|absent|pneumonia|lung||"}},
      {"semicolon_cuts_scope",
       "Negative for pneumothorax; mild cardiomegaly.",
       {"anatomicalfinding|absent|pneumothorax|lung|bilateral|",
        "anatomicalfinding|present|cardiomegaly|cardiac silhouette||"}},
      {"however_cuts_scope",
       "No opacity however there is edema.",
       {"anatomicalfinding|absent|opacity|||",
        "anatomicalfinding|present|pulmonary edema|lung|bilateral|"}},
      {"window_exceeded",
       "No significant interval change in the appearance of the effusion.",
       {"anatomicalfinding|present|pleural effusion|costophrenic angle|bilateral|"}},
      {"free_of_cue",
       "Free of infiltrate.",
       {"anatomicalfinding|absent|infiltrate|||"}},
      {"post_cue_ignored",
       "Effusion is not seen.",
       {"anatomicalfinding|present|pleural effusion|costophrenic angle|bilateral|"}},
      {"severity_cleared_when_absent",
       "No large effusion.",
       {"anatomicalfinding|absent|pleural effusion|costophrenic angle|bilateral|"}},
  };
  return cases;
}

inline const std::vector<ExtractFixture>& longest_match() {
  static const std::vector<ExtractFixture> cases = {
      {"cue_three_tokens",
       "No evidence of pneumothorax.",
       {"anatomicalfinding|absent|pneumothorax|lung|bilateral|"}},
      {"core_shadows_anatomy",
       "Enlarged cardiac silhouette.",
       {"anatomicalfinding|present|cardiomegaly|cardiac silhouette||"}},
      {"anatomy_shadows_laterality",
       "Opacity in the right upper lobe.",
       {"anatomicalfinding|present|opacity|right upper lobe|right|"}},
      {"three_token_core",
       "Pulmonary vascular congestion.",
       {"anatomicalfinding|present|vascular congestion|hilar structures|bilateral|"}},
      {"free_air_not_cue",
       "Free air under the right hemidiaphragm.",
       {"anatomicalfinding|present|pneumoperitoneum|hemidiaphragm|right|"}},
      {"two_token_severity",
       "Moderate sized effusion.",
       {"anatomicalfinding|present|pleural effusion|costophrenic angle|bilateral|moderate"}},
  };
  return cases;
}

inline const std::vector<ExtractFixture>& completion() {
  static const std::vector<ExtractFixture> cases = {
      {"anatomy_and_laterality",
       "No pneumothorax.",
       {"anatomicalfinding|absent|pneumothorax|lung|bilateral|"}},
      {"anatomy_only",
       "Moderate cardiomegaly.",
       {"anatomicalfinding|present|cardiomegaly|cardiac silhouette||moderate"}},
      {"explicit_laterality_kept",
       "Left pleural effusion.",
       {"anatomicalfinding|present|pleural effusion|costophrenic angle|left|"}},
      {"device_rule",
       "Endotracheal tube in standard position.",
       {"device|present|endotracheal tube|trachea||"}},
      {"rule_skipped_with_anatomy",
       "Pneumonia in the right lower lobe.",
       {"disease|present|pneumonia|right lower lobe|right|"}},
      {"spine_rule",
       "Scoliosis.",
       {"anatomicalfinding|present|scoliosis|spine||"}},
      {"no_rule_stays_bare",
       "Fracture.",
       {"anatomicalfinding|present|fracture|||"}},
  };
  return cases;
}

inline const std::vector<ExtractFixture>& multi_anatomy() {
  static const std::vector<ExtractFixture> cases = {
      {"two_lobes",
       "Opacity in the right upper lobe and left lower lobe.",
       {"anatomicalfinding|present|opacity|right upper lobe|right|",
        "anatomicalfinding|present|opacity|left lower lobe|left|"}},
      {"shared_laterality_collapses",
       "Atelectasis at the left base and right base.",
       {"anatomicalfinding|present|atelectasis|lower lung zone|left|"}},
      {"three_anatomies",
       "Nodules in the right upper lobe, right middle lobe and lingula.",
       {"anatomicalfinding|present|nodule|right upper lobe|right|",
        "anatomicalfinding|present|nodule|right middle lobe|right|",
        "anatomicalfinding|present|nodule|lingula||"}},
      {"bilateral_spreads",
       "Bilateral opacities in the upper lobe and lower lobe.",
       {"anatomicalfinding|present|opacity|upper lung zone|bilateral|",
        "anatomicalfinding|present|opacity|lower lung zone|bilateral|"}},
      {"negated_expansion",
       "No effusion at either costophrenic angle or cardiophrenic angle.",
       {"anatomicalfinding|absent|pleural effusion|costophrenic angle||",
        "anatomicalfinding|absent|pleural effusion|cardiophrenic angle||"}},
      {"duplicate_mentions_dedupe",
       "Scarring in the apex and left apex.",
       {"anatomicalfinding|present|scarring|apical zone|left|"}},
      {"modifiers_join_nearest_core",
       "Opacity in the left lung and consolidation in the right lung.",
       {"anatomicalfinding|present|opacity||left|",
        "anatomicalfinding|present|consolidation|lung|right|"}},
  };
  return cases;
}

}  // namespace fixtures
