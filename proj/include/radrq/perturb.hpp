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
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "radrq/bleu.hpp"
#include "radrq/extract.hpp"
#include "radrq/lexicon.hpp"
#include "radrq/pattern.hpp"
#include "radrq/rng.hpp"
#include "radrq/score.hpp"

namespace radrq {

enum class PerturbationKind {
  negation_flip,
  finding_substitution,
  location_alteration,
  severity_alteration,
};

inline constexpr PerturbationKind kAllPerturbationKinds[] = {
    PerturbationKind::negation_flip,
    PerturbationKind::finding_substitution,
    PerturbationKind::location_alteration,
    PerturbationKind::severity_alteration,
};

inline std::string to_string(PerturbationKind k) {
  switch (k) {
    case PerturbationKind::negation_flip: return "negation_flip";
    case PerturbationKind::finding_substitution: return "finding_substitution";
    case PerturbationKind::location_alteration: return "location_alteration";
    case PerturbationKind::severity_alteration: return "severity_alteration";
  }
  return "?";
}

// Short flag names used on the command line and in record ids.
inline std::string flag_from_kind(PerturbationKind k) {
  switch (k) {
    case PerturbationKind::negation_flip: return "negation";
    case PerturbationKind::finding_substitution: return "finding";
    case PerturbationKind::location_alteration: return "location";
    case PerturbationKind::severity_alteration: return "severity";
  }
  return "?";
}

inline PerturbationKind kind_from_flag(std::string_view flag) {
  if (flag == "negation") return PerturbationKind::negation_flip;
  if (flag == "finding") return PerturbationKind::finding_substitution;
  if (flag == "location") return PerturbationKind::location_alteration;
  if (flag == "severity") return PerturbationKind::severity_alteration;
  throw std::invalid_argument("unknown perturbation kind: " + std::string(flag));
}

struct PerturbationSpec {
  PerturbationKind kind = PerturbationKind::negation_flip;
  std::size_t count = 1;
  std::uint64_t seed = 42;
};

// Renders one pattern back to text. Laterality is written only where it adds
// information: before the finding when there is no anatomy, before the
// anatomy when it differs from the laterality implied by the anatomy name.
inline std::string render_pattern(const FFLPattern& p, const Lexicon& lexicon) {
  std::string out;
  if (p.polarity == Polarity::absent) out += "no ";
  if (!p.severity.empty()) out += p.severity + " ";
  if (p.anatomy.empty() && !p.laterality.empty()) out += p.laterality + " ";
  out += p.core_finding;
  if (!p.anatomy.empty()) {
    out += " in the ";
    if (!p.laterality.empty() && p.laterality != lexicon.intrinsic_laterality(p.anatomy)) {
      out += p.laterality + " ";
    }
    out += p.anatomy;
  }
  out += ".";
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') {
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
  }
  return out;
}

inline std::string render_report(const std::vector<FFLPattern>& patterns,
                                 const Lexicon& lexicon) {
  std::string out;
  for (const FFLPattern& p : patterns) {
    if (!out.empty()) out += " ";
    out += render_pattern(p, lexicon);
  }
  return out;
}

struct PerturbResult {
  std::vector<FFLPattern> patterns;
  std::string text;
  std::size_t n_perturbed = 0;
};

namespace detail {

inline bool perturb_eligible(const FFLPattern& p, PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::negation_flip:
    case PerturbationKind::finding_substitution:
      return true;
    case PerturbationKind::location_alteration:
      return !p.anatomy.empty();
    case PerturbationKind::severity_alteration:
      return p.polarity == Polarity::present;
  }
  return false;
}

template <class Engine>
inline void apply_perturbation(FFLPattern& p, PerturbationKind kind, const Lexicon& lexicon,
                               Engine& engine) {
  switch (kind) {
    case PerturbationKind::negation_flip: {
      p.polarity = p.polarity == Polarity::present ? Polarity::absent : Polarity::present;
      if (p.polarity == Polarity::absent) p.severity.clear();
      break;
    }
    case PerturbationKind::finding_substitution: {
      std::vector<const LexiconEntry*> pool;
      for (const LexiconEntry* e : lexicon.entries(TermCategory::core_finding)) {
        if (e->canonical_name != p.core_finding) pool.push_back(e);
      }
      if (pool.empty()) throw std::runtime_error("no alternative core finding in lexicon");
      const LexiconEntry* pick = pool[draw_below(engine, pool.size())];
      p.core_finding = pick->canonical_name;
      p.finding_type = pick->finding_type;
      break;
    }
    case PerturbationKind::location_alteration: {
      std::vector<const LexiconEntry*> pool;
      for (const LexiconEntry* e : lexicon.entries(TermCategory::anatomy)) {
        if (e->canonical_name != p.anatomy) pool.push_back(e);
      }
      if (pool.empty()) throw std::runtime_error("no alternative anatomy in lexicon");
      const LexiconEntry* pick = pool[draw_below(engine, pool.size())];
      p.anatomy = pick->canonical_name;
      const std::string intrinsic = lexicon.intrinsic_laterality(p.anatomy);
      if (!intrinsic.empty()) {
        p.laterality = intrinsic;
      } else if (!p.laterality.empty()) {
        try {
          resolve_region(lexicon.catalog(), p.anatomy, p.laterality);
        } catch (const std::runtime_error&) {
          p.laterality.clear();
        }
      }
      break;
    }
    case PerturbationKind::severity_alteration: {
      if (p.severity.empty() || p.severity == "mild") {
        p.severity = "moderate";
      } else if (p.severity == "moderate") {
        p.severity = "severe";
      } else {
        p.severity = "mild";
      }
      break;
    }
  }
}

}  // namespace detail

// Mutates `spec.count` randomly chosen eligible patterns (fewer when the
// eligible pool is smaller), then re-deduplicates and renders. The count must
// be within [1, patterns.size()]; an empty eligible pool is an error.
inline PerturbResult perturb_report(const std::vector<FFLPattern>& patterns,
                                    const PerturbationSpec& spec, const Lexicon& lexicon) {
  if (patterns.empty()) throw std::invalid_argument("cannot perturb an empty pattern list");
  if (spec.count < 1 || spec.count > patterns.size()) {
    throw std::invalid_argument("perturbation count must be in [1, n_patterns]");
  }
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (detail::perturb_eligible(patterns[i], spec.kind)) pool.push_back(i);
  }
  if (pool.empty()) {
    throw std::runtime_error("no eligible pattern for " + to_string(spec.kind));
  }

  std::mt19937_64 engine(spec.seed);
  const std::size_t k = std::min(spec.count, pool.size());
  const auto picks = sample_without_replacement(engine, pool.size(), k);

  PerturbResult out;
  out.patterns = patterns;
  for (const std::size_t pick : picks) {
    detail::apply_perturbation(out.patterns[pool[pick]], spec.kind, lexicon, engine);
  }
  out.patterns = dedupe_keep_first(out.patterns);
  out.text = render_report(out.patterns, lexicon);
  out.n_perturbed = k;
  return out;
}

struct MetricDelta {
  double baseline = 0.0;
  double perturbed = 0.0;
  double delta = 0.0;
};

struct SensitivityResult {
  PerturbationKind kind = PerturbationKind::negation_flip;
  std::size_t n_variants = 0;  // scored variants
  std::size_t n_skipped = 0;   // variants skipped for lack of eligible input
  std::map<std::string, MetricDelta> metrics;
};

struct SensitivityReport {
  std::string image_id;
  std::string atlas_id;
  std::string ground_truth;
};

// One concrete perturbed report, exactly as scored by the study.
struct PerturbedRecord {
  std::string source_image_id;
  PerturbationKind kind = PerturbationKind::negation_flip;
  std::size_t variant = 0;
  std::uint64_t seed = 0;
  std::string text;
  std::string gt_rendered;
};

// For each spec, perturbs every report `n_variants` times and reports the
// drop of each metric from its self-comparison baseline. The baseline pair
// is the rendered ground truth scored against itself, so rendering cannot
// leak into the deltas. Reports with no extractable patterns are skipped.
inline std::vector<SensitivityResult> sensitivity_study(
    const std::vector<SensitivityReport>& corpus, const std::vector<PerturbationSpec>& specs,
    const Lexicon& lexicon, const RegionAtlas& atlas, std::size_t n_variants,
    const ScoreOptions& options = {}, std::vector<PerturbedRecord>* sink = nullptr) {
  if (corpus.empty()) throw std::invalid_argument("sensitivity study over zero reports");
  if (n_variants == 0) throw std::invalid_argument("sensitivity study needs n_variants >= 1");

  static const char* const kMetricNames[] = {"rq",     "f1_core", "f1_anatomy",
                                             "f1_all", "miou",    "bleu"};

  ExtractOptions ex;
  ex.negation_window = options.negation_window;

  std::vector<SensitivityResult> out;
  for (const PerturbationSpec& spec : specs) {
    SensitivityResult res;
    res.kind = spec.kind;
    std::map<std::string, std::vector<double>> baseline_values;
    std::map<std::string, std::vector<double>> perturbed_values;

    for (std::size_t ri = 0; ri < corpus.size(); ++ri) {
      const SensitivityReport& report = corpus[ri];
      const auto gt_patterns = extract_ffl(report.ground_truth, lexicon, ex);
      if (gt_patterns.empty()) {
        res.n_skipped += n_variants;
        continue;
      }
      const std::string gt_rendered = render_report(gt_patterns, lexicon);
      const PairScore base =
          rq_pair(gt_rendered, gt_rendered, report.atlas_id, lexicon, atlas, options);
      const double base_bleu = bleu(gt_rendered, {gt_rendered}).score;

      for (std::size_t v = 0; v < n_variants; ++v) {
        PerturbationSpec vspec = spec;
        vspec.seed = mix_seed(spec.seed, ri, static_cast<std::uint64_t>(spec.kind), v);
        PerturbResult pr;
        try {
          pr = perturb_report(gt_patterns, vspec, lexicon);
        } catch (const std::invalid_argument&) {
          ++res.n_skipped;
          continue;
        } catch (const std::runtime_error&) {
          ++res.n_skipped;
          continue;
        }
        const PairScore ps =
            rq_pair(gt_rendered, pr.text, report.atlas_id, lexicon, atlas, options);
        const double pb = bleu(pr.text, {gt_rendered}).score;

        const auto push = [&](const char* name, double base_v, double pert_v) {
          baseline_values[name].push_back(base_v);
          perturbed_values[name].push_back(pert_v);
        };
        push("rq", base.rq, ps.rq);
        push("f1_core", base.lexical[0].f1, ps.lexical[0].f1);
        push("f1_anatomy", base.lexical[1].f1, ps.lexical[1].f1);
        push("f1_all", base.lexical[2].f1, ps.lexical[2].f1);
        push("miou", base.miou, ps.miou);
        push("bleu", base_bleu, pb);
        ++res.n_variants;

        if (sink != nullptr) {
          PerturbedRecord rec;
          rec.source_image_id = report.image_id;
          rec.kind = spec.kind;
          rec.variant = v;
          rec.seed = vspec.seed;
          rec.text = pr.text;
          rec.gt_rendered = gt_rendered;
          sink->push_back(std::move(rec));
        }
      }
    }

    for (const char* name : kMetricNames) {
      MetricDelta d;
      if (res.n_variants > 0) {
        d.baseline = stable_mean(baseline_values[name]);
        d.perturbed = stable_mean(perturbed_values[name]);
        d.delta = d.baseline - d.perturbed;
      }
      res.metrics.emplace(name, d);
    }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace radrq
