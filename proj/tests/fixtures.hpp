// Shared test fixtures. Circulant members are given by their chord offsets;
// g8s is the structural fixture rebuilt from its first-row band signs.
#ifndef BIGRAPH_TESTS_FIXTURES_HPP
#define BIGRAPH_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <vector>

#include "bigraph/census.hpp"
#include "bigraph/graph.hpp"

namespace bigraph::fixtures {

inline BalancedBipartiteGraph circulant(int n, std::initializer_list<int> offsets) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int o : offsets) edges.emplace_back(i, wrap_index(i + o, n));
  return from_edge_list(n, edges);
}

inline BalancedBipartiteGraph g6() { return circulant(6, {0, -1, 3}); }
inline BalancedBipartiteGraph g6b() { return circulant(6, {0, -1, 1}); }
inline BalancedBipartiteGraph g8m() { return circulant(8, {0, -1, 1, 4}); }

inline BalancedBipartiteGraph g8s() {
  return graph_from_signed_matrix(matrix_from_first_row_band(8, {1, 1, -1, -1}));
}

// Two complete 3x3 blocks; `joined` adds the single bridge x1 y4.
inline BalancedBipartiteGraph two_k33(bool joined) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      edges.emplace_back(i, j);
      edges.emplace_back(i + 3, j + 3);
    }
  if (joined) edges.emplace_back(1, 4);
  return from_edge_list(6, edges);
}

inline BalancedBipartiteGraph gdis() { return two_k33(false); }
inline BalancedBipartiteGraph ges() { return two_k33(true); }

inline BalancedBipartiteGraph k33() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) edges.emplace_back(i, j);
  return from_edge_list(3, edges);
}

}  // namespace bigraph::fixtures

#endif
