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
#include <string>
#include <tuple>
#include <vector>

#include "radrq/atlas.hpp"
#include "radrq/geometry.hpp"
#include "radrq/lexicon.hpp"
#include "radrq/matching.hpp"
#include "radrq/pattern.hpp"

namespace radrq {

struct GroundedPattern {
  FFLPattern pattern;
  std::vector<BBox> boxes;
};

struct GroundingDiagnostics {
  std::size_t n_input = 0;
  std::size_t n_grounded = 0;
  std::size_t skipped_no_anatomy = 0;
  std::size_t skipped_unresolvable = 0;
  std::size_t skipped_missing_region = 0;
};

struct GroundResult {
  std::vector<GroundedPattern> grounded;
  GroundingDiagnostics diagnostics;
};

// Maps each pattern to the atlas boxes of its resolved regions. Patterns
// without anatomy, with unresolvable anatomy, or with any resolved region
// missing from the image are skipped and tallied; only an unknown image id
// is an error.
inline GroundResult ground(const std::vector<FFLPattern>& patterns, const std::string& image_id,
                           const RegionAtlas& atlas, const RegionCatalog& catalog) {
  const auto& boxes_by_region = atlas.image(image_id);
  GroundResult out;
  out.diagnostics.n_input = patterns.size();
  for (const FFLPattern& p : patterns) {
    if (p.anatomy.empty()) {
      out.diagnostics.skipped_no_anatomy++;
      continue;
    }
    std::vector<std::string> regions;
    try {
      regions = resolve_region(catalog, p.anatomy, p.laterality);
    } catch (const std::runtime_error&) {
      out.diagnostics.skipped_unresolvable++;
      continue;
    }
    GroundedPattern g;
    g.pattern = p;
    bool complete = true;
    for (const std::string& region : regions) {
      const auto it = boxes_by_region.find(region);
      if (it == boxes_by_region.end()) {
        complete = false;
        break;
      }
      g.boxes.push_back(it->second);
    }
    if (!complete) {
      out.diagnostics.skipped_missing_region++;
      continue;
    }
    out.grounded.push_back(std::move(g));
  }
  out.diagnostics.n_grounded = out.grounded.size();
  return out;
}

// Matching over grounded patterns: candidate pairs share finding type,
// polarity and core finding; edge weight is the IOU of their box sets.
inline Matching max_weight_matching(const std::vector<GroundedPattern>& gt,
                                    const std::vector<GroundedPattern>& pred) {
  std::vector<MatchEdge> edges;
  for (std::size_t g = 0; g < gt.size(); ++g) {
    const auto gk = std::tie(gt[g].pattern.finding_type, gt[g].pattern.polarity,
                             gt[g].pattern.core_finding);
    for (std::size_t p = 0; p < pred.size(); ++p) {
      const auto pk = std::tie(pred[p].pattern.finding_type, pred[p].pattern.polarity,
                               pred[p].pattern.core_finding);
      if (gk != pk) continue;
      edges.push_back({g, p, iou(gt[g].boxes, pred[p].boxes)});
    }
  }
  return max_weight_matching(gt.size(), pred.size(), edges);
}

// Mean IOU over the matched pairs, normalized by both grounded sides:
// 2 * total matched weight / (|gt| + |pred|). Both sides empty scores 1.0,
// exactly one side empty scores 0.0.
inline double miou(const std::vector<GroundedPattern>& gt,
                   const std::vector<GroundedPattern>& pred) {
  if (gt.empty() && pred.empty()) return 1.0;
  if (gt.empty() || pred.empty()) return 0.0;
  const Matching m = max_weight_matching(gt, pred);
  return 2.0 * m.total_weight / static_cast<double>(gt.size() + pred.size());
}

}  // namespace radrq
