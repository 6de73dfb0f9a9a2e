#include "bigraph/graph.hpp"

#include <algorithm>
#include <bit>

namespace bigraph {

namespace {

std::uint64_t full_mask(int n) {
  return n == 64 ? ~0ull : ((1ull << n) - 1);
}

}  // namespace

BalancedBipartiteGraph::BalancedBipartiteGraph(int n, std::vector<std::uint64_t> x_rows)
    : n_(n), x_rows_(std::move(x_rows)) {
  if (n < 1) throw Error(Errc::InvalidInput, "class size n must be positive");
  if (n > 64) throw Error(Errc::UnsupportedN, "n exceeds the 64-column dense representation");
  if (x_rows_.size() != static_cast<std::size_t>(n))
    throw Error(Errc::InvalidInput, "adjacency row count does not match n");
  const std::uint64_t full = full_mask(n);
  y_cols_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (x_rows_[i] & ~full) throw Error(Errc::IndexOutOfRange, "adjacency bit outside 1..n");
    std::uint64_t row = x_rows_[i];
    while (row) {
      int j = std::countr_zero(row);
      row &= row - 1;
      y_cols_[j] |= 1ull << i;
    }
  }
}

int BalancedBipartiteGraph::size() const {
  int total = 0;
  for (std::uint64_t row : x_rows_) total += std::popcount(row);
  return total;
}

int BalancedBipartiteGraph::degree_x(int i) const {
  return std::popcount(x_rows_[static_cast<std::size_t>(i - 1)]);
}

int BalancedBipartiteGraph::degree_y(int j) const {
  return std::popcount(y_cols_[static_cast<std::size_t>(j - 1)]);
}

bool BalancedBipartiteGraph::is_regular() const {
  if (n_ % 2 != 0) return false;
  const int k = n_ / 2;
  for (int i = 1; i <= n_; ++i)
    if (degree_x(i) != k || degree_y(i) != k) return false;
  return true;
}

std::vector<std::pair<int, int>> BalancedBipartiteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= n_; ++i) {
    std::uint64_t row = x_rows_[static_cast<std::size_t>(i - 1)];
    while (row) {
      int j = std::countr_zero(row);
      row &= row - 1;
      out.emplace_back(i, j + 1);
    }
  }
  return out;
}

BalancedBipartiteGraph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw Error(Errc::InvalidInput, "class size n must be positive");
  if (n > 64) throw Error(Errc::UnsupportedN, "n exceeds the 64-column dense representation");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (const auto& [i, j] : edges) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw Error(Errc::IndexOutOfRange,
                  "edge (" + std::to_string(i) + ", " + std::to_string(j) + ") outside 1.." + std::to_string(n));
    const std::uint64_t bit = 1ull << (j - 1);
    if (rows[static_cast<std::size_t>(i - 1)] & bit)
      throw Error(Errc::DuplicateEdge,
                  "duplicate edge (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    rows[static_cast<std::size_t>(i - 1)] |= bit;
  }
  return BalancedBipartiteGraph(n, std::move(rows));
}

bool HamiltonLabeling::valid_for(const BalancedBipartiteGraph& g) const {
  const int n = g.n();
  if (x_order.size() != static_cast<std::size_t>(n) || y_order.size() != static_cast<std::size_t>(n))
    return false;
  std::vector<char> seen_x(static_cast<std::size_t>(n) + 1, 0), seen_y(static_cast<std::size_t>(n) + 1, 0);
  for (int v : x_order) {
    if (v < 1 || v > n || seen_x[v]) return false;
    seen_x[v] = 1;
  }
  for (int v : y_order) {
    if (v < 1 || v > n || seen_y[v]) return false;
    seen_y[v] = 1;
  }
  for (int t = 0; t < n; ++t) {
    if (!g.has_edge(x_order[t], y_order[t])) return false;
    if (!g.has_edge(x_order[(t + 1) % n], y_order[t])) return false;
  }
  return true;
}

namespace {

// Shared backtracking engine: searches for a cycle through every non-excluded
// vertex. Next moves are tried in ascending index order, so the first cycle
// found is deterministic. A branch is abandoned as soon as the unvisited
// remainder (plus the path endpoint and the anchor) falls apart into more
// than one piece.
struct SpanningCycleSearch {
  const BalancedBipartiteGraph& g;
  std::uint64_t all_x, all_y;
  int m = 0;
  int anchor = 0;  // 0-based x index
  std::uint64_t vx = 0, vy = 0;
  std::vector<int> xs, ys;  // 0-based path

  explicit SpanningCycleSearch(const BalancedBipartiteGraph& graph, std::uint64_t ex_x, std::uint64_t ex_y)
      : g(graph) {
    const std::uint64_t full = full_mask(g.n());
    all_x = full & ~ex_x;
    all_y = full & ~ex_y;
  }

  bool remainder_connected(bool cur_is_y, int cur) const {
    std::uint64_t rx = (all_x & ~vx) | (1ull << anchor);
    std::uint64_t ry = all_y & ~vy;
    std::uint64_t sx = 0, sy = 0;
    if (cur_is_y) {
      ry |= 1ull << cur;
      sy = 1ull << cur;
    } else {
      rx |= 1ull << cur;
      sx = 1ull << cur;
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::uint64_t reach_y = 0;
      for (std::uint64_t t = sx; t;) {
        int i = std::countr_zero(t);
        t &= t - 1;
        reach_y |= g.x_rows()[i];
      }
      reach_y &= ry & ~sy;
      if (reach_y) {
        sy |= reach_y;
        grew = true;
      }
      std::uint64_t reach_x = 0;
      for (std::uint64_t t = sy; t;) {
        int j = std::countr_zero(t);
        t &= t - 1;
        reach_x |= g.y_cols()[j];
      }
      reach_x &= rx & ~sx;
      if (reach_x) {
        sx |= reach_x;
        grew = true;
      }
    }
    return sx == rx && sy == ry;
  }

  bool extend() {
    const int px = static_cast<int>(xs.size());
    const int py = static_cast<int>(ys.size());
    if (px == m && py == m) return (g.y_cols()[ys.back()] >> anchor) & 1u;
    if (px > py) {
      std::uint64_t cand = g.x_rows()[xs.back()] & all_y & ~vy;
      while (cand) {
        int j = std::countr_zero(cand);
        cand &= cand - 1;
        ys.push_back(j);
        vy |= 1ull << j;
        if (remainder_connected(true, j) && extend()) return true;
        ys.pop_back();
        vy &= ~(1ull << j);
      }
    } else {
      std::uint64_t cand = g.y_cols()[ys.back()] & all_x & ~vx;
      while (cand) {
        int i = std::countr_zero(cand);
        cand &= cand - 1;
        xs.push_back(i);
        vx |= 1ull << i;
        if (remainder_connected(false, i) && extend()) return true;
        xs.pop_back();
        vx &= ~(1ull << i);
      }
    }
    return false;
  }

  std::optional<CycleWitness> run() {
    m = std::popcount(all_x);
    if (m == 0 || m != std::popcount(all_y) || m < 2) return std::nullopt;
    anchor = std::countr_zero(all_x);
    xs.assign(1, anchor);
    vx = 1ull << anchor;
    if (!extend()) return std::nullopt;
    CycleWitness w;
    w.xs.reserve(xs.size());
    w.ys.reserve(ys.size());
    for (int i : xs) w.xs.push_back(i + 1);
    for (int j : ys) w.ys.push_back(j + 1);
    return w;
  }
};

}  // namespace

std::optional<CycleWitness> find_spanning_cycle(const BalancedBipartiteGraph& g, std::uint64_t excluded_x,
                                                std::uint64_t excluded_y) {
  SpanningCycleSearch search(g, excluded_x, excluded_y);
  return search.run();
}

std::optional<HamiltonLabeling> find_hamilton_cycle(const BalancedBipartiteGraph& g) {
  auto cycle = find_spanning_cycle(g, 0, 0);
  if (!cycle) return std::nullopt;
  return HamiltonLabeling{std::move(cycle->xs), std::move(cycle->ys)};
}

BalancedBipartiteGraph relabel_along_hamilton(const BalancedBipartiteGraph& g, const HamiltonLabeling& h) {
  if (!h.valid_for(g)) throw Error(Errc::InvalidLabeling, "labeling is not a Hamilton cycle of the graph");
  const int n = g.n();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.has_edge(h.x_order[i], h.y_order[j])) rows[i] |= 1ull << j;
  return BalancedBipartiteGraph(n, std::move(rows));
}

bool is_canonically_labeled(const BalancedBipartiteGraph& g) {
  const int n = g.n();
  for (int i = 1; i <= n; ++i)
    if (!g.has_edge(i, i) || !g.has_edge(i, wrap_index(i - 1, n))) return false;
  return true;
}

SignedAdjacencyMatrix signed_matrix(const BalancedBipartiteGraph& g) {
  if (!is_canonically_labeled(g))
    throw Error(Errc::NotCanonical, "graph is not in canonical Hamilton labeling");
  const int n = g.n();
  SignedAdjacencyMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.set(i, j, g.has_edge(i, j) ? 1 : -1);
  return m;
}

BalancedBipartiteGraph graph_from_signed_matrix(const SignedAdjacencyMatrix& m) {
  const int n = m.n();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (m.at(i, j) == 1) rows[static_cast<std::size_t>(i - 1)] |= 1ull << (j - 1);
  return BalancedBipartiteGraph(n, std::move(rows));
}

int SignedAdjacencyMatrix::row_sum(int i) const {
  int s = 0;
  for (int j = 1; j <= n_; ++j) s += at(i, j);
  return s;
}

int SignedAdjacencyMatrix::col_sum(int j) const {
  int s = 0;
  for (int i = 1; i <= n_; ++i) s += at(i, j);
  return s;
}

bool SignedAdjacencyMatrix::all_line_sums_zero() const {
  for (int i = 1; i <= n_; ++i)
    if (row_sum(i) != 0) return false;
  for (int j = 1; j <= n_; ++j)
    if (col_sum(j) != 0) return false;
  return true;
}

bool validate_cycle(const BalancedBipartiteGraph& g, const CycleWitness& c, int expected_length) {
  const std::size_t m = c.xs.size();
  if (c.ys.size() != m) return false;
  if (expected_length < 4 || expected_length % 2 != 0) return false;
  if (static_cast<int>(2 * m) != expected_length) return false;
  const int n = g.n();
  std::uint64_t seen_x = 0, seen_y = 0;
  for (std::size_t t = 0; t < m; ++t) {
    const int i = c.xs[t], j = c.ys[t];
    if (i < 1 || i > n || j < 1 || j > n) return false;
    if ((seen_x >> (i - 1)) & 1u) return false;
    if ((seen_y >> (j - 1)) & 1u) return false;
    seen_x |= 1ull << (i - 1);
    seen_y |= 1ull << (j - 1);
  }
  for (std::size_t t = 0; t < m; ++t) {
    if (!g.has_edge(c.xs[t], c.ys[t])) return false;
    if (!g.has_edge(c.xs[(t + 1) % m], c.ys[t])) return false;
  }
  return true;
}

void require_class_member(const BalancedBipartiteGraph& g) {
  if (g.order() <= 8) throw Error(Errc::TooSmall, "order too small (need 2n > 8)");
  if (g.n() % 2 != 0 || !g.is_regular())
    throw Error(Errc::NotBalancedRegular, "not n/2-regular");
  if (!find_hamilton_cycle(g)) throw Error(Errc::NotHamiltonian, "not hamiltonian");
}

}  // namespace bigraph
