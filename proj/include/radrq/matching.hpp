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
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace radrq {

struct MatchEdge {
  std::size_t gt = 0;
  std::size_t pred = 0;
  double weight = 0.0;
};

struct Matching {
  std::vector<MatchEdge> pairs;  // sorted by (gt, pred)
  double total_weight = 0.0;
  std::vector<std::size_t> unmatched_gt;
  std::vector<std::size_t> unmatched_pred;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void merge(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// One connected component solved exactly: iterate `rows`, bitmask `cols`.
// Weights live in a dense local matrix; absent edges cannot be paired.
struct ComponentSolver {
  std::vector<std::vector<double>> weight;
  std::vector<std::vector<char>> has_edge;
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<std::unordered_map<std::uint64_t, double>> memo;

  double opt(std::size_t i, std::uint64_t mask) {
    if (i == n_rows) return 0.0;
    auto& m = memo[i];
    const auto it = m.find(mask);
    if (it != m.end()) return it->second;
    double best = opt(i + 1, mask);
    for (std::size_t j = 0; j < n_cols; ++j) {
      if (!has_edge[i][j] || ((mask >> j) & 1u)) continue;
      const double cand = weight[i][j] + opt(i + 1, mask | (std::uint64_t{1} << j));
      if (cand > best) best = cand;
    }
    m.emplace(mask, best);
    return best;
  }

  // Pairs (row, col) of the maximum-weight matching whose pair sequence is
  // lexicographically smallest in row-major order. A remaining optimum of
  // zero ends the sequence: the empty suffix precedes any further pair.
  std::vector<std::pair<std::size_t, std::size_t>> solve() {
    memo.assign(n_rows, {});
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::uint64_t mask = 0;
    double remaining = opt(0, 0);
    for (std::size_t i = 0; i < n_rows && remaining != 0.0; ++i) {
      bool matched = false;
      for (std::size_t j = 0; j < n_cols; ++j) {
        if (!has_edge[i][j] || ((mask >> j) & 1u)) continue;
        const double rest = opt(i + 1, mask | (std::uint64_t{1} << j));
        if (weight[i][j] + rest == remaining) {
          out.emplace_back(i, j);
          mask |= std::uint64_t{1} << j;
          remaining = rest;
          matched = true;
          break;
        }
      }
      if (!matched) remaining = opt(i + 1, mask);
    }
    return out;
  }
};

}  // namespace detail

// Exact maximum-weight bipartite matching. Only listed edges may be paired;
// zero-weight edges are candidates like any other. Ties between equal-weight
// matchings resolve to the lexicographically smallest (gt, pred) pair
// sequence, where a shorter sequence precedes its extensions.
inline Matching max_weight_matching(std::size_t n_gt, std::size_t n_pred,
                                    const std::vector<MatchEdge>& edges) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const MatchEdge& e : edges) {
    if (e.gt >= n_gt || e.pred >= n_pred) {
      throw std::invalid_argument("matching edge endpoint out of range");
    }
    if (!seen.insert({e.gt, e.pred}).second) {
      throw std::invalid_argument("duplicate matching edge");
    }
  }

  detail::UnionFind uf(n_gt + n_pred);
  for (const MatchEdge& e : edges) uf.merge(e.gt, n_gt + e.pred);

  std::unordered_map<std::size_t, std::size_t> comp_index;
  struct Component {
    std::vector<std::size_t> gts;
    std::vector<std::size_t> preds;
    std::vector<const MatchEdge*> edges;
  };
  std::vector<Component> comps;
  const auto comp_of = [&](std::size_t node) -> Component& {
    const std::size_t root = uf.find(node);
    const auto it = comp_index.find(root);
    if (it != comp_index.end()) return comps[it->second];
    comp_index.emplace(root, comps.size());
    comps.emplace_back();
    return comps.back();
  };
  for (std::size_t g = 0; g < n_gt; ++g) comp_of(g).gts.push_back(g);
  for (std::size_t p = 0; p < n_pred; ++p) comp_of(n_gt + p).preds.push_back(p);
  for (const MatchEdge& e : edges) comp_of(e.gt).edges.push_back(&e);

  Matching result;
  for (const Component& comp : comps) {
    if (comp.edges.empty()) continue;
    const bool swap_sides = comp.preds.size() > 63;
    if (swap_sides && comp.gts.size() > 63) {
      throw std::runtime_error("matching component exceeds 63 vertices on both sides");
    }
    const auto& rows = swap_sides ? comp.preds : comp.gts;
    const auto& cols = swap_sides ? comp.gts : comp.preds;

    detail::ComponentSolver solver;
    solver.n_rows = rows.size();
    solver.n_cols = cols.size();
    solver.weight.assign(rows.size(), std::vector<double>(cols.size(), 0.0));
    solver.has_edge.assign(rows.size(), std::vector<char>(cols.size(), 0));
    std::unordered_map<std::size_t, std::size_t> row_of, col_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);
    for (std::size_t j = 0; j < cols.size(); ++j) col_of.emplace(cols[j], j);
    for (const MatchEdge* e : comp.edges) {
      const std::size_t r = row_of.at(swap_sides ? e->pred : e->gt);
      const std::size_t c = col_of.at(swap_sides ? e->gt : e->pred);
      solver.weight[r][c] = e->weight;
      solver.has_edge[r][c] = 1;
    }
    for (const auto& [r, c] : solver.solve()) {
      MatchEdge pair;
      pair.gt = swap_sides ? cols[c] : rows[r];
      pair.pred = swap_sides ? rows[r] : cols[c];
      pair.weight = solver.weight[r][c];
      result.pairs.push_back(pair);
    }
  }

  std::sort(result.pairs.begin(), result.pairs.end(), [](const MatchEdge& a, const MatchEdge& b) {
    return a.gt != b.gt ? a.gt < b.gt : a.pred < b.pred;
  });
  result.total_weight = 0.0;
  for (const MatchEdge& e : result.pairs) result.total_weight += e.weight;

  std::vector<char> gt_used(n_gt, 0), pred_used(n_pred, 0);
  for (const MatchEdge& e : result.pairs) {
    gt_used[e.gt] = 1;
    pred_used[e.pred] = 1;
  }
  for (std::size_t g = 0; g < n_gt; ++g) {
    if (!gt_used[g]) result.unmatched_gt.push_back(g);
  }
  for (std::size_t p = 0; p < n_pred; ++p) {
    if (!pred_used[p]) result.unmatched_pred.push_back(p);
  }
  return result;
}

}  // namespace radrq
