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
#include <optional>
#include <stdexcept>
#include <vector>

namespace radrq {

// Axis-aligned box, corners (x1, y1) top-left and (x2, y2) bottom-right.
struct BBox {
  double x1 = 0.0;
  double y1 = 0.0;
  double x2 = 0.0;
  double y2 = 0.0;

  double area() const { return (x2 - x1) * (y2 - y1); }
  bool valid() const { return x1 < x2 && y1 < y2; }
  BBox translated(double dx, double dy) const { return {x1 + dx, y1 + dy, x2 + dx, y2 + dy}; }

  friend bool operator==(const BBox& a, const BBox& b) {
    return a.x1 == b.x1 && a.y1 == b.y1 && a.x2 == b.x2 && a.y2 == b.y2;
  }
};

inline std::optional<BBox> box_intersection(const BBox& a, const BBox& b) {
  const BBox r{std::max(a.x1, b.x1), std::max(a.y1, b.y1), std::min(a.x2, b.x2),
               std::min(a.y2, b.y2)};
  if (!r.valid()) return std::nullopt;
  return r;
}

// Exact area of the union via an x-strip sweep with merged y-intervals.
inline double union_area(const std::vector<BBox>& boxes) {
  for (const BBox& b : boxes) {
    if (!b.valid()) throw std::invalid_argument("degenerate box in union_area");
  }
  if (boxes.empty()) return 0.0;
  std::vector<double> xs;
  xs.reserve(boxes.size() * 2);
  for (const BBox& b : boxes) {
    xs.push_back(b.x1);
    xs.push_back(b.x2);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  double total = 0.0;
  std::vector<std::pair<double, double>> intervals;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double x_lo = xs[i];
    const double x_hi = xs[i + 1];
    intervals.clear();
    for (const BBox& b : boxes) {
      if (b.x1 <= x_lo && b.x2 >= x_hi) intervals.emplace_back(b.y1, b.y2);
    }
    if (intervals.empty()) continue;
    std::sort(intervals.begin(), intervals.end());
    double covered = 0.0;
    double cur_lo = intervals.front().first;
    double cur_hi = intervals.front().second;
    for (std::size_t k = 1; k < intervals.size(); ++k) {
      if (intervals[k].first > cur_hi) {
        covered += cur_hi - cur_lo;
        cur_lo = intervals[k].first;
        cur_hi = intervals[k].second;
      } else {
        cur_hi = std::max(cur_hi, intervals[k].second);
      }
    }
    covered += cur_hi - cur_lo;
    total += covered * (x_hi - x_lo);
  }
  return total;
}

// Intersection-over-union between two box sets. Both sets must be non-empty.
inline double iou(const std::vector<BBox>& a, const std::vector<BBox>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("iou of empty box set");
  for (const BBox& box : a) {
    if (!box.valid()) throw std::invalid_argument("degenerate box in iou");
  }
  for (const BBox& box : b) {
    if (!box.valid()) throw std::invalid_argument("degenerate box in iou");
  }
  std::vector<BBox> overlaps;
  for (const BBox& ba : a) {
    for (const BBox& bb : b) {
      if (const auto r = box_intersection(ba, bb)) overlaps.push_back(*r);
    }
  }
  const double inter = union_area(overlaps);
  std::vector<BBox> all = a;
  all.insert(all.end(), b.begin(), b.end());
  const double uni = union_area(all);
  return inter / uni;
}

}  // namespace radrq
