#include "bigraph/oracle.hpp"

#include <algorithm>
#include <bit>

namespace bigraph {

namespace {

// Depth-first path extension for a cycle of exactly m x-vertices and m
// y-vertices whose lowest x index is the anchor. Candidate moves run in
// ascending index order; branches die once a side runs out of candidates.
struct FixedLengthSearch {
  const BalancedBipartiteGraph& g;
  int m;
  std::uint64_t full;
  std::uint64_t above_anchor = 0;  // x indices strictly greater than the anchor
  int anchor = 0;
  std::uint64_t vx = 0, vy = 0;
  std::vector<int> xs, ys;

  FixedLengthSearch(const BalancedBipartiteGraph& graph, int half_length)
      : g(graph), m(half_length), full(graph.n() == 64 ? ~0ull : ((1ull << graph.n()) - 1)) {}

  bool extend() {
    const int px = static_cast<int>(xs.size());
    const int py = static_cast<int>(ys.size());
    if (px == m && py == m) return (g.y_cols()[ys.back()] >> anchor) & 1u;
    if (px > py) {
      if (std::popcount(full & ~vy) < m - py) return false;
      std::uint64_t cand = g.x_rows()[xs.back()] & ~vy;
      while (cand) {
        int j = std::countr_zero(cand);
        cand &= cand - 1;
        ys.push_back(j);
        vy |= 1ull << j;
        if (extend()) return true;
        ys.pop_back();
        vy &= ~(1ull << j);
      }
    } else {
      if (std::popcount(above_anchor & ~vx) < m - px) return false;
      std::uint64_t cand = g.y_cols()[ys.back()] & above_anchor & ~vx;
      while (cand) {
        int i = std::countr_zero(cand);
        cand &= cand - 1;
        xs.push_back(i);
        vx |= 1ull << i;
        if (extend()) return true;
        xs.pop_back();
        vx &= ~(1ull << i);
      }
    }
    return false;
  }

  std::optional<CycleWitness> run() {
    for (anchor = 0; anchor <= g.n() - m; ++anchor) {
      above_anchor = full & ~((2ull << anchor) - 1);
      vx = 1ull << anchor;
      vy = 0;
      xs.assign(1, anchor);
      ys.clear();
      if (extend()) {
        CycleWitness w;
        for (int i : xs) w.xs.push_back(i + 1);
        for (int j : ys) w.ys.push_back(j + 1);
        return w;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<CycleWitness> find_cycle_of_length(const BalancedBipartiteGraph& g, int length) {
  if (length < 4 || length % 2 != 0 || length > 2 * g.n()) return std::nullopt;
  FixedLengthSearch search(g, length / 2);
  return search.run();
}

bool has_cycle_of_length(const BalancedBipartiteGraph& g, int length) {
  return find_cycle_of_length(g, length).has_value();
}

PancyclicityReport is_bipancyclic(const BalancedBipartiteGraph& g) {
  PancyclicityReport rep;
  rep.n = g.n();
  for (int len = 4; len <= 2 * g.n(); len += 2)
    if (has_cycle_of_length(g, len)) rep.lengths_present.push_back(len);
  rep.is_bipancyclic = static_cast<int>(rep.lengths_present.size()) == std::max(0, g.n() - 1);
  return rep;
}

EsPrediction es_predict(const BalancedBipartiteGraph& g) {
  EsPrediction p;
  if (!find_hamilton_cycle(g)) {
    p.reason = EsReason::NotHamiltonian;
    return p;
  }
  // Strict inequality: 2 * size > n^2.
  if (2 * g.size() <= g.n() * g.n()) {
    p.reason = EsReason::SizeTooSmall;
    return p;
  }
  p.predict_bipancyclic = true;
  return p;
}

namespace {

// Edge count of g - {x_i, y_j}, counted directly off the adjacency rows.
int induced_subgraph_size(const BalancedBipartiteGraph& g, int i, int j) {
  int count = 0;
  for (int a = 1; a <= g.n(); ++a) {
    if (a == i) continue;
    count += std::popcount(g.x_rows()[static_cast<std::size_t>(a - 1)] & ~(1ull << (j - 1)));
  }
  return count;
}

}  // namespace

SecondAssertionReport find_near_hamilton_omitting_adjacent_pair(const BalancedBipartiteGraph& g) {
  require_class_member(g);
  SecondAssertionReport rep;
  for (const auto& [i, j] : g.edges()) {
    auto cycle = find_spanning_cycle(g, 1ull << (i - 1), 1ull << (j - 1));
    if (!cycle) continue;
    rep.pair = {i, j};
    rep.witness = std::move(cycle);
    rep.subgraph_size = induced_subgraph_size(g, i, j);
    break;
  }
  return rep;
}

std::pair<SecondAssertionOutcome, SecondAssertionReport> check_second_assertion(const BalancedBipartiteGraph& g) {
  SecondAssertionReport rep = find_near_hamilton_omitting_adjacent_pair(g);
  if (!rep.pair) return {SecondAssertionOutcome::Inconclusive, std::move(rep)};
  const bool confirmed = is_bipancyclic(g).is_bipancyclic;
  rep.bipancyclic_confirmed = confirmed;
  return {confirmed ? SecondAssertionOutcome::BipancyclicConfirmed : SecondAssertionOutcome::Refuted,
          std::move(rep)};
}

}  // namespace bigraph
