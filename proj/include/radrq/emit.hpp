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

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "radrq/lexical.hpp"
#include "radrq/pattern.hpp"
#include "radrq/perturb.hpp"
#include "radrq/score.hpp"

namespace radrq {

inline constexpr int kOutputFormatVersion = 1;

// Three-decimal rendering of a rounded value, for CSV cells.
inline std::string format3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", round3(x));
  return buf;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::vector<Granularity> emitted_levels(const std::optional<Granularity>& level) {
  if (level) return {*level};
  return {Granularity::core, Granularity::anatomy, Granularity::all};
}

// One scored corpus row; `ok == false` rows carry only the error message.
struct PairRow {
  std::string image_id;
  bool ok = true;
  std::string error;
  PairScore score;
  double bleu = 0.0;
};

struct ScoreSummary {
  CorpusScore corpus;
  double mean_bleu = 0.0;    // mean of per-pair BLEU scores
  double corpus_bleu = 0.0;  // pooled over all pairs
};

inline std::string score_csv(const std::vector<PairRow>& rows,
                             const std::optional<ScoreSummary>& summary,
                             const std::optional<Granularity>& level = std::nullopt) {
  const auto levels = emitted_levels(level);
  std::string out = "# format_version: 1\n";
  out += "image_id,status";
  for (const Granularity g : levels) {
    const std::string suffix = to_string(g);
    out += ",precision_" + suffix + ",recall_" + suffix + ",f1_" + suffix;
  }
  out += ",miou,rq,bleu,corpus_bleu,n_gt_patterns,n_pred_patterns,n_gt_grounded,"
         "n_pred_grounded,error\n";

  std::size_t n_gt = 0, n_pred = 0, g_gt = 0, g_pred = 0;
  for (const PairRow& row : rows) {
    out += csv_escape(row.image_id);
    if (!row.ok) {
      out += ",error";
      for (std::size_t i = 0; i < levels.size() * 3 + 3; ++i) out += ",";
      out += ",,,,," + csv_escape(row.error) + "\n";
      continue;
    }
    out += ",ok";
    for (const Granularity g : levels) {
      const LexicalScore& s = row.score.lexical[static_cast<std::size_t>(g)];
      out += "," + format3(s.precision) + "," + format3(s.recall) + "," + format3(s.f1);
    }
    out += "," + format3(row.score.miou) + "," + format3(row.score.rq) + "," +
           format3(row.bleu) + ",";
    out += "," + std::to_string(row.score.gt.n_patterns) + "," +
           std::to_string(row.score.pred.n_patterns) + "," +
           std::to_string(row.score.gt.n_grounded) + "," +
           std::to_string(row.score.pred.n_grounded) + ",\n";
    n_gt += row.score.gt.n_patterns;
    n_pred += row.score.pred.n_patterns;
    g_gt += row.score.gt.n_grounded;
    g_pred += row.score.pred.n_grounded;
  }
  if (summary) {
    out += "all,summary";
    for (const Granularity g : levels) {
      const auto i = static_cast<std::size_t>(g);
      out += "," + format3(summary->corpus.mean_precision[i]) + "," +
             format3(summary->corpus.mean_recall[i]) + "," + format3(summary->corpus.mean_f1[i]);
    }
    out += "," + format3(summary->corpus.mean_miou) + "," + format3(summary->corpus.mean_rq) +
           "," + format3(summary->mean_bleu) + "," + format3(summary->corpus_bleu);
    out += "," + std::to_string(n_gt) + "," + std::to_string(n_pred) + "," +
           std::to_string(g_gt) + "," + std::to_string(g_pred) + ",\n";
  }
  return out;
}

inline std::string score_jsonl(const std::vector<PairRow>& rows,
                               const std::optional<ScoreSummary>& summary,
                               const std::optional<Granularity>& level = std::nullopt) {
  const auto levels = emitted_levels(level);
  std::string out;
  for (const PairRow& row : rows) {
    nlohmann::json j;
    j["type"] = "pair";
    j["format_version"] = kOutputFormatVersion;
    j["image_id"] = row.image_id;
    if (!row.ok) {
      j["status"] = "error";
      j["error"] = row.error;
      out += j.dump() + "\n";
      continue;
    }
    j["status"] = "ok";
    nlohmann::json lex;
    for (const Granularity g : levels) {
      const LexicalScore& s = row.score.lexical[static_cast<std::size_t>(g)];
      lex[to_string(g)] = {{"tp", s.tp},           {"fp", s.fp},
                           {"fn", s.fn},           {"precision", s.precision},
                           {"recall", s.recall},   {"f1", s.f1}};
    }
    j["lexical"] = lex;
    j["miou"] = row.score.miou;
    j["rq"] = row.score.rq;
    j["bleu"] = row.bleu;
    j["diagnostics"] = {
        {"gt",
         {{"n_patterns", row.score.gt.n_patterns},
          {"n_grounded", row.score.gt.n_grounded},
          {"n_skipped", row.score.gt.n_skipped}}},
        {"pred",
         {{"n_patterns", row.score.pred.n_patterns},
          {"n_grounded", row.score.pred.n_grounded},
          {"n_skipped", row.score.pred.n_skipped}}}};
    out += j.dump() + "\n";
  }
  if (summary) {
    nlohmann::json j;
    j["type"] = "summary";
    j["format_version"] = kOutputFormatVersion;
    j["n_pairs"] = summary->corpus.n_pairs;
    nlohmann::json mean;
    for (const Granularity g : levels) {
      const auto i = static_cast<std::size_t>(g);
      const std::string suffix = to_string(g);
      mean["precision_" + suffix] = summary->corpus.mean_precision[i];
      mean["recall_" + suffix] = summary->corpus.mean_recall[i];
      mean["f1_" + suffix] = summary->corpus.mean_f1[i];
    }
    mean["miou"] = summary->corpus.mean_miou;
    mean["rq"] = summary->corpus.mean_rq;
    mean["bleu"] = summary->mean_bleu;
    j["mean"] = mean;
    j["corpus_bleu"] = summary->corpus_bleu;
    out += j.dump() + "\n";
  }
  return out;
}

inline std::string sensitivity_csv(const std::vector<SensitivityResult>& results) {
  static const char* const kMetricNames[] = {"rq",     "f1_core", "f1_anatomy",
                                             "f1_all", "miou",    "bleu"};
  std::string out = "# format_version: 1\n";
  for (const SensitivityResult& r : results) {
    out += "# " + to_string(r.kind) + ": variants=" + std::to_string(r.n_variants) +
           " skipped=" + std::to_string(r.n_skipped) + "\n";
  }
  out += "metric";
  for (const SensitivityResult& r : results) out += "," + to_string(r.kind);
  out += "\n";
  for (const char* name : kMetricNames) {
    out += name;
    for (const SensitivityResult& r : results) {
      const auto it = r.metrics.find(name);
      out += "," + format3(it == r.metrics.end() ? 0.0 : it->second.delta);
    }
    out += "\n";
  }
  return out;
}

inline std::string sensitivity_jsonl(const std::vector<SensitivityResult>& results) {
  std::string out;
  for (const SensitivityResult& r : results) {
    nlohmann::json j;
    j["type"] = "sensitivity";
    j["format_version"] = kOutputFormatVersion;
    j["kind"] = to_string(r.kind);
    j["n_variants"] = r.n_variants;
    j["n_skipped"] = r.n_skipped;
    nlohmann::json metrics;
    for (const auto& [name, d] : r.metrics) {
      metrics[name] = {{"baseline", d.baseline}, {"perturbed", d.perturbed}, {"delta", d.delta}};
    }
    j["metrics"] = metrics;
    out += j.dump() + "\n";
  }
  return out;
}

struct ExtractRow {
  std::string image_id;
  FFLPattern pattern;
};

inline std::string extract_csv(const std::vector<ExtractRow>& rows, std::size_t n_reports) {
  std::string out = "# format_version: 1\n";
  out += "image_id,sentence_index,finding_type,polarity,core_finding,anatomy,laterality,"
         "severity,pattern\n";
  for (const ExtractRow& row : rows) {
    const FFLPattern& p = row.pattern;
    out += csv_escape(row.image_id) + "," + std::to_string(p.sentence_index) + "," +
           csv_escape(p.finding_type) + "," + to_string(p.polarity) + "," +
           csv_escape(p.core_finding) + "," + csv_escape(p.anatomy) + "," +
           csv_escape(p.laterality) + "," + csv_escape(p.severity) + "," +
           csv_escape(to_pipe(p)) + "\n";
  }
  out += "# summary: reports=" + std::to_string(n_reports) +
         " patterns=" + std::to_string(rows.size()) + "\n";
  return out;
}

inline std::string extract_jsonl(const std::vector<ExtractRow>& rows, std::size_t n_reports) {
  std::string out;
  for (const ExtractRow& row : rows) {
    const FFLPattern& p = row.pattern;
    nlohmann::json j;
    j["type"] = "pattern";
    j["format_version"] = kOutputFormatVersion;
    j["image_id"] = row.image_id;
    j["sentence_index"] = p.sentence_index;
    j["finding_type"] = p.finding_type;
    j["polarity"] = to_string(p.polarity);
    j["core_finding"] = p.core_finding;
    j["anatomy"] = p.anatomy;
    j["laterality"] = p.laterality;
    j["severity"] = p.severity;
    j["pattern"] = to_pipe(p);
    out += j.dump() + "\n";
  }
  nlohmann::json j;
  j["type"] = "summary";
  j["format_version"] = kOutputFormatVersion;
  j["n_reports"] = n_reports;
  j["n_patterns"] = rows.size();
  out += j.dump() + "\n";
  return out;
}

}  // namespace radrq
