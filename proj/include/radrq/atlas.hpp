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

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "radrq/geometry.hpp"
#include "radrq/lexicon.hpp"

namespace radrq {

// Per-image bounding boxes for the named atlas regions.
class RegionAtlas {
 public:
  using RegionBoxes = std::map<std::string, BBox>;

  static RegionAtlas load(const std::string& path, const RegionCatalog& catalog) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open atlas file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str(), catalog, path);
  }

  static RegionAtlas from_json_text(const std::string& text, const RegionCatalog& catalog,
                                    const std::string& origin = "<string>") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error(origin + ": " + e.what());
    }
    try {
      return from_json(j, catalog);
    } catch (const std::exception& e) {
      throw std::runtime_error(origin + ": " + e.what());
    }
  }

  static RegionAtlas from_json(const nlohmann::json& j, const RegionCatalog& catalog) {
    if (!j.is_object()) throw std::runtime_error("atlas root must be an object");
    if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
        j["format_version"].get<int>() != 1) {
      throw std::runtime_error("unsupported atlas format_version (expected 1)");
    }
    if (!j.contains("images") || !j["images"].is_object()) {
      throw std::runtime_error("atlas has no images object");
    }
    RegionAtlas atlas;
    for (const auto& [image_id, regions] : j["images"].items()) {
      if (!regions.is_object()) {
        throw std::runtime_error("atlas image '" + image_id + "' must map regions to boxes");
      }
      RegionBoxes boxes;
      for (const auto& [region, arr] : regions.items()) {
        if (!catalog.region_set.count(region)) {
          throw std::runtime_error("atlas image '" + image_id + "' has unknown region '" +
                                   region + "'");
        }
        if (!arr.is_array() || arr.size() != 4 || !arr[0].is_number() || !arr[1].is_number() ||
            !arr[2].is_number() || !arr[3].is_number()) {
          throw std::runtime_error("atlas box for ('" + image_id + "', '" + region +
                                   "') must be [x1, y1, x2, y2]");
        }
        const BBox box{arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>(),
                       arr[3].get<double>()};
        if (!box.valid()) {
          throw std::runtime_error("atlas box for ('" + image_id + "', '" + region +
                                   "') is degenerate");
        }
        boxes.emplace(region, box);
      }
      atlas.add_image(image_id, std::move(boxes));
    }
    return atlas;
  }

  void add_image(const std::string& image_id, RegionBoxes boxes) {
    if (image_id.empty()) throw std::invalid_argument("empty atlas image id");
    for (const auto& [region, box] : boxes) {
      (void)region;
      if (!box.valid()) throw std::invalid_argument("degenerate box in atlas image");
    }
    if (!images_.emplace(image_id, std::move(boxes)).second) {
      throw std::invalid_argument("duplicate atlas image id: '" + image_id + "'");
    }
  }

  bool has_image(const std::string& image_id) const { return images_.count(image_id) > 0; }

  const RegionBoxes& image(const std::string& image_id) const {
    const auto it = images_.find(image_id);
    if (it == images_.end()) {
      throw std::runtime_error("unknown atlas image id: '" + image_id + "'");
    }
    return it->second;
  }

  std::vector<std::string> image_ids() const {
    std::vector<std::string> out;
    out.reserve(images_.size());
    for (const auto& [id, boxes] : images_) {
      (void)boxes;
      out.push_back(id);
    }
    return out;
  }

  std::size_t size() const { return images_.size(); }

 private:
  std::map<std::string, RegionBoxes> images_;
};

}  // namespace radrq
