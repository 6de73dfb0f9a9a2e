// Core vocabulary: balanced bipartite graphs, Hamilton labelings, signed
// adjacency matrices, and machine-checkable cycle witnesses.
#ifndef BIGRAPH_GRAPH_HPP
#define BIGRAPH_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bigraph {

enum class Errc {
  IndexOutOfRange,
  DuplicateEdge,
  InvalidLabeling,
  NotCanonical,
  InvalidInput,
  NotRegular,
  NotBalancedRegular,
  NotHamiltonian,
  TooSmall,
  UnsupportedN,
  PreconditionFailed,
  TheoremViolation,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Maps v into 1..n cyclically (0 means n, n+1 means 1, and so on).
inline int wrap_index(int v, int n) {
  int r = v % n;
  return r <= 0 ? r + n : r;
}

// Bipartite graph with colour classes X = {x_1..x_n} and Y = {y_1..y_n}.
// Adjacency is stored as n rows of n bits (bit j-1 of row i-1 set iff
// x_i ~ y_j); column masks are kept alongside for fast neighbour scans from
// the Y side. Immutable after construction.
class BalancedBipartiteGraph {
 public:
  // `x_rows[i-1]` bit (j-1) set iff x_i ~ y_j. Requires 1 <= n <= 64.
  BalancedBipartiteGraph(int n, std::vector<std::uint64_t> x_rows);

  int n() const { return n_; }
  int order() const { return 2 * n_; }
  int size() const;

  bool has_edge(int i, int j) const {
    return (x_rows_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1u;
  }
  int degree_x(int i) const;
  int degree_y(int j) const;
  // True iff n is even and every vertex has degree exactly n/2.
  bool is_regular() const;

  const std::vector<std::uint64_t>& x_rows() const { return x_rows_; }
  const std::vector<std::uint64_t>& y_cols() const { return y_cols_; }

  // Edges as (i, j) pairs, ascending by i then j.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const BalancedBipartiteGraph&, const BalancedBipartiteGraph&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> x_rows_;
  std::vector<std::uint64_t> y_cols_;
};

// A Hamilton cycle written as x_{xo[0]} y_{yo[0]} x_{xo[1]} y_{yo[1]} ...
// y_{yo[n-1]} and back to x_{xo[0]}. Both orders are permutations of 1..n.
struct HamiltonLabeling {
  std::vector<int> x_order;
  std::vector<int> y_order;

  // All 2n consecutive pairs of the encoded cycle are edges of g and both
  // orders are bijections.
  bool valid_for(const BalancedBipartiteGraph& g) const;
};

// n x n matrix over {+1, -1}: +1 at (i, j) iff x_i ~ y_j.
class SignedAdjacencyMatrix {
 public:
  explicit SignedAdjacencyMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, -1) {}

  int n() const { return n_; }
  int at(int i, int j) const { return a_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)]; }
  void set(int i, int j, int v) { a_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = static_cast<std::int8_t>(v); }

  int row_sum(int i) const;
  int col_sum(int j) const;
  bool all_line_sums_zero() const;

  friend bool operator==(const SignedAdjacencyMatrix&, const SignedAdjacencyMatrix&) = default;

 private:
  int n_;
  std::vector<std::int8_t> a_;
};

// Alternating closed walk x_{xs[0]} y_{ys[0]} x_{xs[1]} ... y_{ys[m-1]} back
// to x_{xs[0]}; certifies a cycle of length xs.size() + ys.size() once it
// passes validate_cycle.
struct CycleWitness {
  std::vector<int> xs;
  std::vector<int> ys;

  int length() const { return static_cast<int>(xs.size() + ys.size()); }

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

BalancedBipartiteGraph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// Deterministic backtracking search anchored at x_1, trying neighbours in
// ascending index order, pruning branches whose unvisited remainder is
// disconnected. The first cycle found defines the canonical labeling.
std::optional<HamiltonLabeling> find_hamilton_cycle(const BalancedBipartiteGraph& g);

// Cycle through every vertex not masked out (bit i-1 of a mask excludes
// x_i resp. y_i); find_hamilton_cycle is the no-exclusion case. Anchored at
// the lowest remaining x index, ascending neighbour order.
std::optional<CycleWitness> find_spanning_cycle(const BalancedBipartiteGraph& g, std::uint64_t excluded_x,
                                                std::uint64_t excluded_y);

// Renames vertices so the given Hamilton cycle reads x_1 y_1 x_2 y_2 ... x_n y_n x_1,
// i.e. the result has edges x_i y_i and x_{i+1} y_i for every i.
BalancedBipartiteGraph relabel_along_hamilton(const BalancedBipartiteGraph& g, const HamiltonLabeling& h);

// True iff the canonical Hamilton edges x_i y_i and x_i y_{i-1} are all present.
bool is_canonically_labeled(const BalancedBipartiteGraph& g);

// Requires a canonically labeled graph (throws Errc::NotCanonical otherwise).
SignedAdjacencyMatrix signed_matrix(const BalancedBipartiteGraph& g);

// Inverse of signed_matrix: edges exactly at the +1 entries.
BalancedBipartiteGraph graph_from_signed_matrix(const SignedAdjacencyMatrix& m);

// True iff c is a genuine cycle of g of exactly expected_length vertices:
// sides alternate by construction, all indices in range and distinct per
// side, every consecutive pair and the wrap-around pair an edge.
bool validate_cycle(const BalancedBipartiteGraph& g, const CycleWitness& c, int expected_length);

// Throws unless g is in the theorem class: order 2n > 8, n even, n/2-regular,
// hamiltonian. Error codes: TooSmall, NotBalancedRegular, NotHamiltonian.
void require_class_member(const BalancedBipartiteGraph& g);

}  // namespace bigraph

#endif
