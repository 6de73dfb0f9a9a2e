// Exhaustive generation of the graph class (canonical Hamilton cycle plus a
// chord matrix with constant line sums) and of the sign matrices obeying the
// structural constraints, plus whole-class verification.
#ifndef BIGRAPH_CENSUS_HPP
#define BIGRAPH_CENSUS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigraph/graph.hpp"

namespace bigraph {

// Documented caps keeping full runs in the minutes range; callers may lift
// them explicitly (the CLI prints a cost warning when they do).
inline constexpr int kClassEnumerationCap = 8;
inline constexpr int kMatrixCensusCap = 12;

using MemberVisitor = std::function<void(const BalancedBipartiteGraph&)>;

// Streams every labeled class member carrying the canonical Hamilton cycle,
// in a fixed order (rows filled top to bottom, column subsets lexicographic),
// duplicate-free. Returns the member count.
std::uint64_t enumerate_class(int n, const MemberVisitor& visit, bool override_cap = false);

// Same stream restricted to first-chord-row subtrees whose ordinal is
// congruent to `part` mod `parts`; the subtrees are disjoint and their union
// over part = 0..parts-1 is the full stream.
std::uint64_t enumerate_class_partition(int n, int part, int parts, const MemberVisitor& visit,
                                        bool override_cap = false);

// Permanent (Ryser) of the 0/1 matrix allowing exactly the non-Hamilton
// positions: the number of perfect chord matchings, which equals the class
// size when the chord degree is 1 (n = 6). Independent counting oracle.
std::uint64_t permanent_matching_count(int n);

// Seeded, reproducible member: canonical Hamilton cycle plus a chord matrix
// found by randomized backtracking (shuffled candidate order per row).
BalancedBipartiteGraph random_member(int n, std::uint64_t seed);

// Rebuilds the full sign matrix from the first row's band entries (offsets
// 2..n-3): fixed border diagonals, and each step down-right flips the sign
// inside the band.
SignedAdjacencyMatrix matrix_from_first_row_band(int n, const std::vector<int>& band_signs);

// Band entries of row 1 (offsets 2..n-3); inverse of the rebuild above.
std::vector<int> first_row_band(const SignedAdjacencyMatrix& m);

struct MatrixCensusCandidate {
  std::vector<int> first_row;                      // band signs, offsets 2..n-3
  bool column_sums_ok = false;                     // all 2n line sums vanish
  std::optional<std::pair<int, int>> extraction;   // (i0, k), empty = search failed
  SignedAdjacencyMatrix matrix;
};

struct MatrixCensusResult {
  int n = 0;
  std::vector<MatrixCensusCandidate> candidates;
};

// Sweeps all 2^(n-4) first rows, keeps those whose alternating band sums
// vanish in every row, and records line sums and the (i0, k) search result.
// When n is not divisible by 4 the band sums cannot vanish and the candidate
// list is empty.
MatrixCensusResult constrained_matrix_census(int n, bool override_cap = false);

struct VerificationSummary {
  int n = 0;
  std::uint64_t member_count = 0;
  std::optional<std::uint64_t> permanent_count;  // independent count, set when chord degree is 1
  std::uint64_t condition1a = 0;
  std::uint64_t condition1b = 0;
  std::uint64_t condition2 = 0;
  std::uint64_t structural = 0;
  std::uint64_t oracle_agreements = 0;
  std::uint64_t second_confirmed = 0;
  std::uint64_t second_inconclusive = 0;
  std::uint64_t second_refuted = 0;
  std::vector<std::string> failures;
};

// Runs extraction, the brute-force oracle cross-check, and the second
// assertion check on every member of the given partition. Pure and
// single-threaded; partitions merge associatively.
VerificationSummary verify_partition(int n, int part, int parts, bool override_cap = false);

void merge_into(VerificationSummary& acc, const VerificationSummary& more);

// Cross-checks the member count against the permanent oracle where it
// applies (n = 6); a mismatch is recorded as a failure.
void finalize_summary(VerificationSummary& summary);

// Single-worker whole-class verification (n in {6, 8} unless overridden).
VerificationSummary verify_theorem(int n, bool override_cap = false);

}  // namespace bigraph

#endif
