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
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "radrq/text.hpp"

namespace radrq {

enum class TermCategory { core_finding, anatomy, laterality, severity, negation_cue };

// Lower value wins lookup ties between equally long surface forms.
inline int category_priority(TermCategory c) {
  switch (c) {
    case TermCategory::core_finding: return 0;
    case TermCategory::anatomy: return 1;
    case TermCategory::laterality: return 2;
    case TermCategory::severity: return 3;
    case TermCategory::negation_cue: return 4;
  }
  return 5;
}

inline std::string to_string(TermCategory c) {
  switch (c) {
    case TermCategory::core_finding: return "core_finding";
    case TermCategory::anatomy: return "anatomy";
    case TermCategory::laterality: return "laterality";
    case TermCategory::severity: return "severity";
    case TermCategory::negation_cue: return "negation_cue";
  }
  return "?";
}

inline TermCategory category_from_string(std::string_view s) {
  if (s == "core_finding") return TermCategory::core_finding;
  if (s == "anatomy") return TermCategory::anatomy;
  if (s == "laterality") return TermCategory::laterality;
  if (s == "severity") return TermCategory::severity;
  if (s == "negation_cue") return TermCategory::negation_cue;
  throw std::invalid_argument("unknown lexicon category: " + std::string(s));
}

struct LexiconEntry {
  TermCategory category = TermCategory::core_finding;
  std::string canonical_name;
  std::string finding_type;  // set only for core_finding entries
  std::vector<std::string> surface_forms;
};

struct CompletionRule {
  std::string trigger_core_finding;
  std::string default_anatomy;
  std::string default_laterality;  // may be empty
};

// The named-region inventory plus the anatomy -> region resolution tables.
struct RegionCatalog {
  std::vector<std::string> regions;
  std::set<std::string> region_set;
  // (anatomy canonical, laterality canonical or "") -> region names.
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> laterality_map;
  // anatomy -> left-side regions followed by right-side regions; derived.
  std::map<std::string, std::vector<std::string>> bilateral_union;
};

// Resolves an (anatomy, laterality) pair to atlas region names.
// Lateralized anatomy + left/right -> that side; bilateral or no laterality
// -> both sides; non-lateralized anatomy -> its single mapping. A canonical
// anatomy that IS a region name resolves to itself as a last resort.
inline std::vector<std::string> resolve_region(const RegionCatalog& catalog,
                                               const std::string& anatomy,
                                               const std::string& laterality) {
  const auto exact = [&](const std::string& lat) -> const std::vector<std::string>* {
    const auto it = catalog.laterality_map.find({anatomy, lat});
    return it == catalog.laterality_map.end() ? nullptr : &it->second;
  };
  const auto both = [&]() -> const std::vector<std::string>* {
    const auto it = catalog.bilateral_union.find(anatomy);
    return it == catalog.bilateral_union.end() ? nullptr : &it->second;
  };
  if (laterality.empty()) {
    if (const auto* r = exact("")) return *r;
    if (const auto* r = both()) return *r;
  } else if (laterality == "bilateral") {
    if (const auto* r = both()) return *r;
    if (const auto* r = exact("")) return *r;
  } else {
    if (const auto* r = exact(laterality)) return *r;
    if (const auto* r = exact("")) return *r;
  }
  if (catalog.region_set.count(anatomy)) return {anatomy};
  throw std::runtime_error("cannot resolve region for anatomy '" + anatomy +
                           "' with laterality '" + laterality + "'");
}

struct LexMatch {
  const LexiconEntry* entry = nullptr;
  std::size_t length = 0;  // tokens consumed
};

class Lexicon {
 public:
  static Lexicon load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str(), path);
  }

  static Lexicon from_json_text(const std::string& text,
                                const std::string& origin = "<string>") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error(origin + ": " + e.what());
    }
    try {
      return from_json(j);
    } catch (const std::exception& e) {
      throw std::runtime_error(origin + ": " + e.what());
    }
  }

  static Lexicon from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::runtime_error("lexicon root must be an object");
    if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
        j["format_version"].get<int>() != 1) {
      throw std::runtime_error("unsupported lexicon format_version (expected 1)");
    }
    Lexicon lex;
    const auto& entries = j.value("entries", nlohmann::json::array());
    if (!entries.is_array() || entries.empty()) {
      throw std::runtime_error("lexicon has no entries");
    }
    for (const auto& e : entries) {
      LexiconEntry entry;
      entry.category = category_from_string(fetch_string(e, "category"));
      entry.canonical_name = fetch_string(e, "canonical");
      if (e.contains("finding_type")) {
        if (entry.category != TermCategory::core_finding) {
          throw std::runtime_error("finding_type only allowed on core_finding entries: '" +
                                   entry.canonical_name + "'");
        }
        entry.finding_type = e["finding_type"].get<std::string>();
      }
      if (entry.category == TermCategory::core_finding && entry.finding_type.empty()) {
        throw std::runtime_error("core_finding entry missing finding_type: '" +
                                 entry.canonical_name + "'");
      }
      if (!e.contains("surface_forms") || !e["surface_forms"].is_array() ||
          e["surface_forms"].empty()) {
        throw std::runtime_error("entry has no surface_forms: '" + entry.canonical_name + "'");
      }
      for (const auto& f : e["surface_forms"]) {
        std::string form = f.get<std::string>();
        if (tokenize(form).empty()) {
          throw std::runtime_error("blank surface form under entry '" +
                                   entry.canonical_name + "'");
        }
        entry.surface_forms.push_back(std::move(form));
      }
      lex.entries_.push_back(std::move(entry));
    }
    for (const auto& r : j.value("completion_rules", nlohmann::json::array())) {
      CompletionRule rule;
      rule.trigger_core_finding = fetch_string(r, "core_finding");
      rule.default_anatomy = fetch_string(r, "anatomy");
      if (r.contains("laterality") && !r["laterality"].is_null()) {
        rule.default_laterality = r["laterality"].get<std::string>();
      }
      lex.rules_.push_back(std::move(rule));
    }
    for (const auto& r : j.value("regions", nlohmann::json::array())) {
      const std::string name = r.get<std::string>();
      if (name.empty()) throw std::runtime_error("empty region name");
      if (!lex.catalog_.region_set.insert(name).second) {
        throw std::runtime_error("duplicate region name: '" + name + "'");
      }
      lex.catalog_.regions.push_back(name);
    }
    for (const auto& m : j.value("laterality_map", nlohmann::json::array())) {
      const std::string anatomy = fetch_string(m, "anatomy");
      std::string lat;
      if (m.contains("laterality") && !m["laterality"].is_null()) {
        lat = m["laterality"].get<std::string>();
      }
      if (!lat.empty() && lat != "left" && lat != "right") {
        throw std::runtime_error("laterality_map laterality must be null, 'left' or 'right'");
      }
      if (!m.contains("regions") || !m["regions"].is_array() || m["regions"].empty()) {
        throw std::runtime_error("laterality_map entry for '" + anatomy + "' has no regions");
      }
      std::vector<std::string> regions;
      for (const auto& r : m["regions"]) {
        const std::string name = r.get<std::string>();
        if (!lex.catalog_.region_set.count(name)) {
          throw std::runtime_error("laterality_map target not in regions: '" + name + "'");
        }
        regions.push_back(name);
      }
      const auto key = std::make_pair(anatomy, lat);
      if (lex.catalog_.laterality_map.count(key)) {
        throw std::runtime_error("duplicate laterality_map key: ('" + anatomy + "', '" +
                                 lat + "')");
      }
      lex.catalog_.laterality_map.emplace(key, std::move(regions));
    }
    lex.index_and_validate();
    return lex;
  }

  std::optional<LexMatch> lookup(const std::vector<Token>& tokens, std::size_t start) const {
    if (start >= tokens.size()) return std::nullopt;
    const auto it = by_first_token_.find(tokens[start].text);
    if (it == by_first_token_.end()) return std::nullopt;
    const LexiconEntry* best = nullptr;
    std::size_t best_len = 0;
    for (const PhraseRef& ref : it->second) {
      const std::size_t n = ref.tokens.size();
      if (start + n > tokens.size()) continue;
      if (best != nullptr && n < best_len) continue;
      bool match = true;
      for (std::size_t k = 1; k < n; ++k) {
        if (tokens[start + k].text != ref.tokens[k]) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      const LexiconEntry* e = &entries_[ref.entry_index];
      if (best == nullptr || n > best_len ||
          (n == best_len &&
           category_priority(e->category) < category_priority(best->category))) {
        best = e;
        best_len = n;
      }
    }
    if (best == nullptr) return std::nullopt;
    return LexMatch{best, best_len};
  }

  const std::vector<LexiconEntry>& entries() const { return entries_; }

  // Entries of one category, ordered by canonical name.
  std::vector<const LexiconEntry*> entries(TermCategory category) const {
    std::vector<const LexiconEntry*> out;
    for (const LexiconEntry& e : entries_) {
      if (e.category == category) out.push_back(&e);
    }
    std::sort(out.begin(), out.end(), [](const LexiconEntry* a, const LexiconEntry* b) {
      return a->canonical_name < b->canonical_name;
    });
    return out;
  }

  const LexiconEntry* find(TermCategory category, std::string_view canonical) const {
    const auto it =
        by_canonical_.find({category_priority(category), std::string(canonical)});
    return it == by_canonical_.end() ? nullptr : &entries_[it->second];
  }

  const CompletionRule* completion_for(std::string_view core_finding) const {
    const auto it = rule_by_core_.find(std::string(core_finding));
    return it == rule_by_core_.end() ? nullptr : &rules_[it->second];
  }

  const std::vector<CompletionRule>& completion_rules() const { return rules_; }

  const RegionCatalog& catalog() const { return catalog_; }

  // Laterality baked into an anatomy's own name ("left lower lobe" -> left);
  // empty when the name carries no left/right token.
  std::string intrinsic_laterality(std::string_view anatomy_canonical) const {
    for (const Token& t : tokenize(anatomy_canonical)) {
      const auto it = side_tokens_.find(t.text);
      if (it != side_tokens_.end()) return it->second;
    }
    return "";
  }

 private:
  struct PhraseRef {
    std::vector<std::string> tokens;
    std::size_t entry_index = 0;
  };

  static std::string fetch_string(const nlohmann::json& j, const char* field) {
    if (!j.is_object() || !j.contains(field) || !j[field].is_string()) {
      throw std::runtime_error(std::string("missing or non-string field '") + field + "'");
    }
    std::string v = j[field].get<std::string>();
    if (v.empty()) throw std::runtime_error(std::string("empty field '") + field + "'");
    return v;
  }

  void index_and_validate() {
    std::map<std::pair<int, std::string>, std::size_t> seen_surfaces;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const LexiconEntry& e = entries_[i];
      const auto key = std::make_pair(category_priority(e.category), e.canonical_name);
      if (!by_canonical_.emplace(key, i).second) {
        throw std::runtime_error("duplicate canonical name '" + e.canonical_name +
                                 "' in category " + to_string(e.category));
      }
      for (const std::string& form : e.surface_forms) {
        PhraseRef ref;
        for (const Token& t : tokenize(form)) ref.tokens.push_back(t.text);
        std::string joined;
        for (const std::string& t : ref.tokens) {
          joined += t;
          joined += ' ';
        }
        const auto skey = std::make_pair(category_priority(e.category), joined);
        if (!seen_surfaces.emplace(skey, i).second) {
          throw std::runtime_error("surface form '" + form + "' appears twice in category " +
                                   to_string(e.category));
        }
        ref.entry_index = i;
        by_first_token_[ref.tokens.front()].push_back(std::move(ref));
      }
      if (e.category == TermCategory::laterality &&
          (e.canonical_name == "left" || e.canonical_name == "right")) {
        for (const std::string& form : e.surface_forms) {
          const auto toks = tokenize(form);
          if (toks.size() == 1) side_tokens_[toks.front().text] = e.canonical_name;
        }
      }
    }
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const CompletionRule& rule = rules_[i];
      if (find(TermCategory::core_finding, rule.trigger_core_finding) == nullptr) {
        throw std::runtime_error("completion rule for '" + rule.trigger_core_finding +
                                 "' references unknown core finding");
      }
      if (find(TermCategory::anatomy, rule.default_anatomy) == nullptr) {
        throw std::runtime_error("completion rule for '" + rule.trigger_core_finding +
                                 "' references unknown anatomy '" + rule.default_anatomy + "'");
      }
      if (!rule.default_laterality.empty() &&
          find(TermCategory::laterality, rule.default_laterality) == nullptr) {
        throw std::runtime_error("completion rule for '" + rule.trigger_core_finding +
                                 "' references unknown laterality '" +
                                 rule.default_laterality + "'");
      }
      if (!rule_by_core_.emplace(rule.trigger_core_finding, i).second) {
        throw std::runtime_error("duplicate completion rule for '" +
                                 rule.trigger_core_finding + "'");
      }
    }
    // Derive the bilateral unions, left side first.
    std::set<std::string> bases;
    for (const auto& [key, regions] : catalog_.laterality_map) {
      (void)regions;
      if (!key.second.empty()) bases.insert(key.first);
    }
    for (const std::string& base : bases) {
      std::vector<std::string> u;
      for (const char* side : {"left", "right"}) {
        const auto it = catalog_.laterality_map.find({base, side});
        if (it == catalog_.laterality_map.end()) continue;
        for (const std::string& r : it->second) {
          if (std::find(u.begin(), u.end(), r) == u.end()) u.push_back(r);
        }
      }
      if (!u.empty()) catalog_.bilateral_union.emplace(base, std::move(u));
    }
  }

  std::vector<LexiconEntry> entries_;
  std::vector<CompletionRule> rules_;
  RegionCatalog catalog_;
  std::map<std::pair<int, std::string>, std::size_t> by_canonical_;
  std::map<std::string, std::vector<PhraseRef>> by_first_token_;
  std::map<std::string, std::size_t> rule_by_core_;
  std::map<std::string, std::string> side_tokens_;
};

}  // namespace radrq
