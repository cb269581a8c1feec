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

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radrq/radrq.hpp"

namespace {

void write_text(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

int cmd_extract(const std::string& lexicon_path, const std::string& input,
                const std::string& output, const std::string& format, std::size_t window) {
  const auto lexicon = radrq::Lexicon::load(lexicon_path);
  const auto records = radrq::read_corpus(input);
  radrq::ExtractOptions options;
  options.negation_window = window;
  std::vector<radrq::ExtractRow> rows;
  for (const radrq::ReportRecord& rec : records) {
    for (const radrq::FFLPattern& p : radrq::extract_ffl(rec.ground_truth, lexicon, options)) {
      rows.push_back({rec.image_id, p});
    }
  }
  write_text(output, format == "csv" ? radrq::extract_csv(rows, records.size())
                                     : radrq::extract_jsonl(rows, records.size()));
  return 0;
}

int cmd_score(const std::string& lexicon_path, const std::string& atlas_path,
              const std::string& input, const std::string& output, const std::string& format,
              const std::string& level_name, bool strict, std::size_t window) {
  const auto lexicon = radrq::Lexicon::load(lexicon_path);
  const auto atlas = radrq::RegionAtlas::load(atlas_path, lexicon.catalog());
  const auto records = radrq::read_corpus(input);
  for (const radrq::ReportRecord& rec : records) {
    if (!rec.prediction) {
      throw std::runtime_error("record '" + rec.image_id + "' has no prediction");
    }
  }
  std::optional<radrq::Granularity> level;
  if (!level_name.empty()) level = radrq::granularity_from_string(level_name);

  radrq::ScoreOptions options;
  options.negation_window = window;
  std::vector<radrq::PairRow> rows;
  std::vector<radrq::PairScore> ok_scores;
  std::vector<double> pair_bleus;
  radrq::BleuAccumulator pooled;
  std::size_t n_errors = 0;
  for (const radrq::ReportRecord& rec : records) {
    radrq::PairRow row;
    row.image_id = rec.image_id;
    try {
      row.score = radrq::rq_pair(rec.ground_truth, *rec.prediction, rec.atlas_id, lexicon,
                                 atlas, options);
      row.bleu = radrq::bleu(*rec.prediction, {rec.ground_truth}).score;
      pooled.add(*rec.prediction, {rec.ground_truth});
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
      ++n_errors;
      rows.push_back(std::move(row));
      continue;
    }
    ok_scores.push_back(row.score);
    pair_bleus.push_back(row.bleu);
    rows.push_back(std::move(row));
  }
  if (ok_scores.empty()) throw std::runtime_error("no pairs could be scored");

  radrq::ScoreSummary summary;
  summary.corpus = radrq::corpus_from_pairs(ok_scores);
  summary.mean_bleu = radrq::stable_mean(pair_bleus);
  summary.corpus_bleu = pooled.finalize().score;

  write_text(output, format == "csv" ? radrq::score_csv(rows, summary, level)
                                     : radrq::score_jsonl(rows, summary, level));
  return (strict && n_errors > 0) ? 2 : 0;
}

int cmd_perturb(const std::string& lexicon_path, const std::string& atlas_path,
                const std::string& input, const std::string& output,
                const std::string& perturbed_out, const std::string& format,
                const std::vector<std::string>& kind_flags, std::size_t count,
                std::uint64_t seed, std::size_t variants, std::size_t window) {
  const auto lexicon = radrq::Lexicon::load(lexicon_path);
  const auto atlas = radrq::RegionAtlas::load(atlas_path, lexicon.catalog());
  const auto records = radrq::read_corpus(input);

  std::vector<radrq::SensitivityReport> corpus;
  std::map<std::string, std::string> atlas_of;
  for (const radrq::ReportRecord& rec : records) {
    corpus.push_back({rec.image_id, rec.atlas_id, rec.ground_truth});
    atlas_of.emplace(rec.image_id, rec.atlas_id);
  }

  std::vector<radrq::PerturbationSpec> specs;
  for (const std::string& flag : kind_flags) {
    specs.push_back({radrq::kind_from_flag(flag), count, seed});
  }

  radrq::ScoreOptions options;
  options.negation_window = window;
  std::vector<radrq::PerturbedRecord> sink;
  const auto results =
      radrq::sensitivity_study(corpus, specs, lexicon, atlas, variants, options, &sink);

  write_text(output, format == "csv" ? radrq::sensitivity_csv(results)
                                     : radrq::sensitivity_jsonl(results));

  std::vector<radrq::ReportRecord> perturbed;
  for (const radrq::PerturbedRecord& rec : sink) {
    radrq::ReportRecord r;
    r.image_id = rec.source_image_id + "#" + radrq::flag_from_kind(rec.kind) + "-v" +
                 std::to_string(rec.variant);
    r.ground_truth = rec.gt_rendered;
    r.prediction = rec.text;
    r.atlas_id = atlas_of.at(rec.source_image_id);
    r.metadata = {{"kind", radrq::to_string(rec.kind)},
                  {"seed", rec.seed},
                  {"source_image_id", rec.source_image_id},
                  {"variant", rec.variant}};
    perturbed.push_back(std::move(r));
  }
  radrq::write_corpus(perturbed_out, perturbed);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FFL pattern extraction and report quality scoring"};
  app.require_subcommand(1);

  std::string lexicon_path, atlas_path, input, output, level, perturbed_out;
  // One format variable per subcommand: the defaults differ, and CLI11
  // applies default_val to the bound variable as soon as it is declared.
  std::string extract_format, score_format, perturb_format;
  std::vector<std::string> kinds;
  std::size_t window = 6, count = 1, variants = 3;
  std::uint64_t seed = 42;
  bool strict = false;

  CLI::App* extract = app.add_subcommand("extract", "Extract FFL patterns from reports");
  extract->add_option("--lexicon", lexicon_path, "Lexicon JSON file")->required();
  extract->add_option("--input", input, "Corpus JSONL file")->required();
  extract->add_option("--output", output, "Output path (default stdout)");
  extract->add_option("--format", extract_format, "Output format")
      ->check(CLI::IsMember({"csv", "json-lines"}))
      ->default_val("json-lines");
  extract->add_option("--negation-window", window, "Max tokens between cue and finding")
      ->default_val(6);

  CLI::App* score = app.add_subcommand("score", "Score predictions against ground truth");
  score->add_option("--lexicon", lexicon_path, "Lexicon JSON file")->required();
  score->add_option("--atlas", atlas_path, "Region atlas JSON file")->required();
  score->add_option("--input", input, "Corpus JSONL file with predictions")->required();
  score->add_option("--output", output, "Output path (default stdout)");
  score->add_option("--format", score_format, "Output format")
      ->check(CLI::IsMember({"csv", "json-lines"}))
      ->default_val("csv");
  score->add_option("--level", level, "Emit a single lexical granularity")
      ->check(CLI::IsMember({"core", "anatomy", "all"}));
  score->add_flag("--strict", strict, "Exit nonzero when any pair fails to score");
  score->add_option("--negation-window", window, "Max tokens between cue and finding")
      ->default_val(6);

  CLI::App* perturb = app.add_subcommand("perturb", "Run the perturbation sensitivity study");
  perturb->add_option("--lexicon", lexicon_path, "Lexicon JSON file")->required();
  perturb->add_option("--atlas", atlas_path, "Region atlas JSON file")->required();
  perturb->add_option("--input", input, "Corpus JSONL file")->required();
  perturb->add_option("--output", output, "Sensitivity table output path")->required();
  perturb->add_option("--format", perturb_format, "Output format")
      ->check(CLI::IsMember({"csv", "json-lines"}))
      ->default_val("csv");
  perturb->add_option("--kind", kinds, "Perturbation kinds to run (repeatable)")
      ->check(CLI::IsMember({"negation", "finding", "location", "severity"}));
  perturb->add_option("--count", count, "Patterns perturbed per variant")->default_val(1);
  perturb->add_option("--seed", seed, "Master random seed")->default_val(42);
  perturb->add_option("--variants", variants, "Variants per report per kind")->default_val(3);
  perturb->add_option("--perturbed-out", perturbed_out,
                      "Perturbed corpus path (default <output>.perturbed.jsonl)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (extract->parsed()) {
      return cmd_extract(lexicon_path, input, output, extract_format, window);
    }
    if (score->parsed()) {
      return cmd_score(lexicon_path, atlas_path, input, output, score_format, level, strict,
                       window);
    }
    if (kinds.empty()) kinds = {"negation", "finding", "location", "severity"};
    if (perturbed_out.empty()) perturbed_out = output + ".perturbed.jsonl";
    return cmd_perturb(lexicon_path, atlas_path, input, output, perturbed_out, perturb_format,
                       kinds, count, seed, variants, window);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
