// Certified extraction of a cycle of length 2n-2 from a hamiltonian
// n/2-regular balanced bipartite graph: two chord-scan branches plus a
// structural branch driven by the sign pattern of the adjacency matrix.
#ifndef BIGRAPH_EXTRACT_HPP
#define BIGRAPH_EXTRACT_HPP

#include <optional>
#include <string_view>
#include <utility>
#include <variant>

#include "bigraph/graph.hpp"

namespace bigraph {

enum class Method { Condition1a, Condition1b, Condition2, Structural };

std::string_view method_name(Method m);  // "condition1a", ...

struct Condition1Indices {
  int i;
  friend bool operator==(const Condition1Indices&, const Condition1Indices&) = default;
};
struct Condition2Indices {
  int i;
  int j;
  friend bool operator==(const Condition2Indices&, const Condition2Indices&) = default;
};
struct StructuralIndices {
  int i0;  // anchor row with a -1 two columns right of the diagonal
  int k;   // chord offset paired across the diagonal
  int l;   // (n - 4) / 4
  friend bool operator==(const StructuralIndices&, const StructuralIndices&) = default;
};
using ExtractionIndices = std::variant<Condition1Indices, Condition2Indices, StructuralIndices>;

struct ExtractionReport {
  int n = 0;
  Method method = Method::Condition1a;
  ExtractionIndices indices;
  CycleWitness witness;              // length 2n-2, passes validate_cycle
  std::pair<int, int> omitted;       // (x index, y index) absent from the witness
  bool omitted_adjacent = false;     // whether the omitted pair is an edge of g
};

// Sign laws of the canonical matrix on the chord band (offsets 2..n-3):
// a +1 entry must turn into -1 one step down-right, a -1 into +1, the four
// diagonals bordering the band are fixed, and the alternating band sums of
// every row must vanish. First offending positions are kept for diagnostics.
struct StructuralCheck {
  bool border_ok = false;
  bool plus_propagation_ok = false;
  bool minus_propagation_ok = false;
  bool band_sums_ok = false;
  std::optional<std::pair<int, int>> border_violation;
  std::optional<std::pair<int, int>> plus_violation;
  std::optional<std::pair<int, int>> minus_violation;
  std::optional<int> band_sums_violation;  // first row whose band sums fail
  std::optional<int> l;                    // (n - 4) / 4, present iff n % 4 == 0

  bool all_hold() const { return border_ok && plus_propagation_ok && minus_propagation_ok && band_sums_ok; }
};

// Searches the band for the anchor row i0 and offset k in 3..n-3 with +1 at
// both (i0, i0+k) and (i0+k, i0); i0 is 1 when (1, 3) holds -1, else 2.
std::optional<std::pair<int, int>> find_structural_anchor(const SignedAdjacencyMatrix& m);

// Scans i = 1..n for a chord two steps back (x_i y_{i-2}) or one step ahead
// (x_i y_{i+1}) of the Hamilton cycle; either yields a cycle through all
// vertices but x_{i-1}, y_{i-1} (resp. x_{i+1}, y_i). Lowest i wins, the
// backward chord first on ties.
std::optional<ExtractionReport> extract_by_condition1(const BalancedBipartiteGraph& g);

// Scans for two parallel chords x_i y_j, x_{i+1} y_{j+1} at a band offset in
// 2..n-3; the cycle runs through both chords omitting x_{j+1} and y_i.
// Lowest (i, then offset) wins.
std::optional<ExtractionReport> extract_by_condition2(const BalancedBipartiteGraph& g);

StructuralCheck check_structural_constraints(const BalancedBipartiteGraph& g);

// Requires check_structural_constraints to pass fully (so n % 4 == 0);
// throws Errc::PreconditionFailed otherwise, and Errc::TheoremViolation if
// the anchor search comes up empty (impossible for genuine inputs).
ExtractionReport extract_structural(const BalancedBipartiteGraph& g);

// Full pipeline: validates class membership, relabels along a Hamilton
// cycle, and tries the three branches in order. The returned witness and
// omitted pair are expressed in the labeling of the input graph; the branch
// indices refer to the canonical relabeling.
ExtractionReport extract(const BalancedBipartiteGraph& g);

}  // namespace bigraph

#endif
