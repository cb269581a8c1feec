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
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace radrq {

// One report pair: ground truth text, optional prediction, and the atlas
// image the pair is grounded against (the record's own id by default).
struct ReportRecord {
  std::string image_id;
  std::string ground_truth;
  std::optional<std::string> prediction;
  std::string atlas_id;
  nlohmann::json metadata = nlohmann::json::object();
};

inline ReportRecord record_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::runtime_error("corpus record must be an object");
  ReportRecord rec;
  if (!j.contains("image_id") || !j["image_id"].is_string() ||
      j["image_id"].get<std::string>().empty()) {
    throw std::runtime_error("corpus record needs a non-empty string image_id");
  }
  rec.image_id = j["image_id"].get<std::string>();
  if (!j.contains("ground_truth") || !j["ground_truth"].is_string()) {
    throw std::runtime_error("corpus record needs a string ground_truth");
  }
  rec.ground_truth = j["ground_truth"].get<std::string>();
  if (j.contains("prediction") && !j["prediction"].is_null()) {
    if (!j["prediction"].is_string()) {
      throw std::runtime_error("corpus record prediction must be a string");
    }
    rec.prediction = j["prediction"].get<std::string>();
  }
  if (j.contains("atlas_id") && !j["atlas_id"].is_null()) {
    if (!j["atlas_id"].is_string()) {
      throw std::runtime_error("corpus record atlas_id must be a string");
    }
    rec.atlas_id = j["atlas_id"].get<std::string>();
  }
  if (rec.atlas_id.empty()) rec.atlas_id = rec.image_id;
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) {
      throw std::runtime_error("corpus record metadata must be an object");
    }
    rec.metadata = j["metadata"];
  }
  return rec;
}

inline nlohmann::json record_to_json(const ReportRecord& rec) {
  nlohmann::json j;
  j["image_id"] = rec.image_id;
  j["ground_truth"] = rec.ground_truth;
  if (rec.prediction) j["prediction"] = *rec.prediction;
  if (rec.atlas_id != rec.image_id) j["atlas_id"] = rec.atlas_id;
  if (!rec.metadata.empty()) j["metadata"] = rec.metadata;
  return j;
}

// JSON-lines corpus reader; blank lines are skipped, errors carry path:line.
inline std::vector<ReportRecord> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::vector<ReportRecord> out;
  std::set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    ReportRecord rec;
    try {
      rec = record_from_json(j);
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!ids.insert(rec.image_id).second) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": duplicate image_id '" + rec.image_id + "'");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

inline void write_corpus(const std::string& path, const std::vector<ReportRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open corpus file for writing: " + path);
  for (const ReportRecord& rec : records) {
    out << record_to_json(rec).dump() << '\n';
  }
  if (!out) throw std::runtime_error("failed writing corpus file: " + path);
}

}  // namespace radrq
