#include "bigraph/census.hpp"

#include <bit>
#include <random>

#include "bigraph/extract.hpp"
#include "bigraph/oracle.hpp"

namespace bigraph {

namespace {

int chord_degree(int n) { return n / 2 - 2; }

void require_census_n(int n, int cap, bool override_cap) {
  if (n < 6 || n % 2 != 0)
    throw Error(Errc::UnsupportedN, "unsupported n (need even n >= 6), got " + std::to_string(n));
  if (n > 64) throw Error(Errc::UnsupportedN, "n exceeds the 64-column dense representation");
  if (n > cap && !override_cap)
    throw Error(Errc::UnsupportedN,
                "n = " + std::to_string(n) + " exceeds the documented cap of " + std::to_string(cap));
}

// Row-by-row backtracking over chord matrices with all line sums equal to
// the chord degree, skipping the two Hamilton positions per row. Column
// subsets are tried in lexicographic order, so the stream order is fixed.
struct ClassEnumerator {
  int n, r, part, parts;
  const MemberVisitor& visit;
  std::vector<int> caps;                 // remaining capacity per column, 0-based
  std::vector<std::uint64_t> chord_rows;
  std::vector<std::uint64_t> ham_rows;
  std::uint64_t count = 0;
  std::uint64_t first_row_ordinal = 0;

  ClassEnumerator(int n_, int part_, int parts_, const MemberVisitor& visit_)
      : n(n_), r(chord_degree(n_)), part(part_), parts(parts_), visit(visit_) {
    caps.assign(static_cast<std::size_t>(n), r);
    chord_rows.reserve(static_cast<std::size_t>(n));
    ham_rows.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      ham_rows[i - 1] = (1ull << (i - 1)) | (1ull << (wrap_index(i - 1, n) - 1));
  }

  // Columns still fillable: enough rows remain, discounting the rows in
  // which a column is a forbidden Hamilton position.
  bool columns_feasible(int rows_done) const {
    const int rem = n - rows_done;
    for (int j = 1; j <= n; ++j) {
      const int c = caps[j - 1];
      if (c == 0) continue;
      if (c > rem) return false;
      int avail = rem;
      if (j > rows_done) --avail;  // row j forbids its diagonal column
      const int below = wrap_index(j + 1, n);
      if (below > rows_done) --avail;  // row j+1 forbids column j
      if (c > avail) return false;
    }
    return true;
  }

  void choose(int i, int min_col, int remaining, std::uint64_t mask) {
    if (remaining == 0) {
      if (i == 1 && static_cast<int>(first_row_ordinal++ % parts) != part) return;
      if (!columns_feasible(i)) return;
      chord_rows.push_back(mask);
      fill_row(i + 1);
      chord_rows.pop_back();
      return;
    }
    const int banned_a = i, banned_b = wrap_index(i - 1, n);
    for (int j = min_col; j <= n - remaining + 1; ++j) {
      if (j == banned_a || j == banned_b || caps[j - 1] == 0) continue;
      --caps[j - 1];
      choose(i, j + 1, remaining - 1, mask | (1ull << (j - 1)));
      ++caps[j - 1];
    }
  }

  void fill_row(int i) {
    if (i > n) {
      ++count;
      std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
      for (int t = 0; t < n; ++t) rows[t] = ham_rows[t] | chord_rows[t];
      visit(BalancedBipartiteGraph(n, std::move(rows)));
      return;
    }
    choose(i, 1, r, 0);
  }
};

}  // namespace

std::uint64_t enumerate_class_partition(int n, int part, int parts, const MemberVisitor& visit,
                                        bool override_cap) {
  require_census_n(n, kClassEnumerationCap, override_cap);
  if (parts < 1 || part < 0 || part >= parts)
    throw Error(Errc::InvalidInput, "partition index out of range");
  ClassEnumerator e(n, part, parts, visit);
  e.fill_row(1);
  return e.count;
}

std::uint64_t enumerate_class(int n, const MemberVisitor& visit, bool override_cap) {
  return enumerate_class_partition(n, 0, 1, visit, override_cap);
}

std::uint64_t permanent_matching_count(int n) {
  if (n < 6 || n % 2 != 0)
    throw Error(Errc::UnsupportedN, "unsupported n (need even n >= 6), got " + std::to_string(n));
  if (n > 20) throw Error(Errc::UnsupportedN, "permanent computation capped at n = 20");
  // Ryser over the matrix with zeros at the Hamilton positions.
  std::vector<std::uint64_t> allowed(static_cast<std::size_t>(n));
  const std::uint64_t full = (1ull << n) - 1;
  for (int i = 1; i <= n; ++i)
    allowed[i - 1] = full & ~((1ull << (i - 1)) | (1ull << (wrap_index(i - 1, n) - 1)));
  long long total = 0;
  for (std::uint64_t subset = 1; subset <= full; ++subset) {
    long long prod = 1;
    for (int i = 0; i < n && prod != 0; ++i)
      prod *= std::popcount(allowed[i] & subset);
    if (prod == 0) continue;
    const int parity = (n - std::popcount(subset)) % 2;
    total += parity ? -prod : prod;
  }
  return static_cast<std::uint64_t>(total);
}

BalancedBipartiteGraph random_member(int n, std::uint64_t seed) {
  if (n < 6 || n % 2 != 0)
    throw Error(Errc::UnsupportedN, "unsupported n (need even n >= 6), got " + std::to_string(n));
  if (n > 24) throw Error(Errc::UnsupportedN, "random generation capped at n = 24");
  const int r = chord_degree(n);
  std::mt19937_64 rng(seed);
  std::vector<int> caps(static_cast<std::size_t>(n), r);
  std::vector<std::uint64_t> chords(static_cast<std::size_t>(n), 0);

  auto columns_feasible = [&](int rows_done) {
    const int rem = n - rows_done;
    for (int j = 1; j <= n; ++j) {
      const int c = caps[j - 1];
      if (c == 0) continue;
      if (c > rem) return false;
      int avail = rem;
      if (j > rows_done) --avail;
      if (wrap_index(j + 1, n) > rows_done) --avail;
      if (c > avail) return false;
    }
    return true;
  };

  std::vector<std::uint64_t> combos;
  auto gen_combos = [&](int i) {
    combos.clear();
    std::vector<int> open;
    for (int j = 1; j <= n; ++j)
      if (j != i && j != wrap_index(i - 1, n) && caps[j - 1] > 0) open.push_back(j);
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
      if (remaining == 0) {
        std::uint64_t mask = 0;
        for (int j : pick) mask |= 1ull << (j - 1);
        combos.push_back(mask);
        return;
      }
      for (std::size_t t = start; t + remaining <= open.size(); ++t) {
        pick.push_back(open[t]);
        self(self, t + 1, remaining - 1);
        pick.pop_back();
      }
    };
    rec(rec, 0, r);
    // Fisher-Yates with explicit modular draws: reproducible across platforms.
    for (std::size_t t = combos.size(); t > 1; --t)
      std::swap(combos[t - 1], combos[rng() % t]);
  };

  auto fill = [&](auto&& self, int i) -> bool {
    if (i > n) return true;
    gen_combos(i);
    const std::vector<std::uint64_t> mine = combos;
    for (std::uint64_t mask : mine) {
      std::uint64_t bits = mask;
      while (bits) {
        --caps[std::countr_zero(bits)];
        bits &= bits - 1;
      }
      if (columns_feasible(i)) {
        chords[i - 1] = mask;
        if (self(self, i + 1)) return true;
      }
      bits = mask;
      while (bits) {
        ++caps[std::countr_zero(bits)];
        bits &= bits - 1;
      }
    }
    return false;
  };

  if (!fill(fill, 1))
    throw Error(Errc::PreconditionFailed, "chord backtracking found no completion");

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    rows[i - 1] = chords[i - 1] | (1ull << (i - 1)) | (1ull << (wrap_index(i - 1, n) - 1));
  return BalancedBipartiteGraph(n, std::move(rows));
}

SignedAdjacencyMatrix matrix_from_first_row_band(int n, const std::vector<int>& band_signs) {
  if (n < 6 || n % 2 != 0) throw Error(Errc::InvalidInput, "need even n >= 6");
  if (band_signs.size() != static_cast<std::size_t>(n - 4))
    throw Error(Errc::InvalidInput, "band must hold n - 4 signs");
  SignedAdjacencyMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    m.set(i, i, 1);
    m.set(i, wrap_index(i - 1, n), 1);
    m.set(i, wrap_index(i + 1, n), -1);
    m.set(i, wrap_index(i - 2, n), -1);
    const int row_sign = (i % 2 == 1) ? 1 : -1;
    for (int d = 2; d <= n - 3; ++d) {
      const int s = band_signs[static_cast<std::size_t>(d - 2)];
      if (s != 1 && s != -1) throw Error(Errc::InvalidInput, "band signs must be +1 or -1");
      m.set(i, wrap_index(i + d, n), s * row_sign);
    }
  }
  return m;
}

std::vector<int> first_row_band(const SignedAdjacencyMatrix& m) {
  const int n = m.n();
  std::vector<int> band;
  band.reserve(static_cast<std::size_t>(n - 4));
  for (int d = 2; d <= n - 3; ++d) band.push_back(m.at(1, wrap_index(1 + d, n)));
  return band;
}

MatrixCensusResult constrained_matrix_census(int n, bool override_cap) {
  require_census_n(n, kMatrixCensusCap, override_cap);
  MatrixCensusResult res;
  res.n = n;
  if (n % 4 != 0) return res;  // odd number of band terms per parity class

  const int b = n - 4;
  for (std::uint64_t code = 0; code < (1ull << b); ++code) {
    std::vector<int> band(static_cast<std::size_t>(b));
    for (int t = 0; t < b; ++t) band[t] = (code >> t & 1) ? -1 : 1;
    SignedAdjacencyMatrix m = matrix_from_first_row_band(n, band);

    bool sums_ok = true;
    for (int i0 = 1; i0 <= n && sums_ok; ++i0) {
      int even_sum = 0, odd_sum = 0;
      for (int d = 2; d <= n - 4; d += 2) even_sum += m.at(i0, wrap_index(i0 + d, n));
      for (int d = 3; d <= n - 3; d += 2) odd_sum += m.at(i0, wrap_index(i0 + d, n));
      sums_ok = even_sum == 0 && odd_sum == 0;
    }
    if (!sums_ok) continue;

    MatrixCensusCandidate cand{std::move(band), m.all_line_sums_zero(), find_structural_anchor(m),
                               std::move(m)};
    res.candidates.push_back(std::move(cand));
  }
  return res;
}

namespace {

void record_failure(VerificationSummary& s, std::uint64_t ordinal, const std::string& msg) {
  s.failures.push_back("member #" + std::to_string(ordinal) + ": " + msg);
}

// Witness must miss exactly the reported pair and nothing else.
bool omitted_pair_consistent(const BalancedBipartiteGraph& g, const ExtractionReport& rep) {
  std::uint64_t wx = 0, wy = 0;
  for (int v : rep.witness.xs) wx |= 1ull << (v - 1);
  for (int v : rep.witness.ys) wy |= 1ull << (v - 1);
  const std::uint64_t full = g.n() == 64 ? ~0ull : ((1ull << g.n()) - 1);
  return (full & ~wx) == (1ull << (rep.omitted.first - 1)) &&
         (full & ~wy) == (1ull << (rep.omitted.second - 1));
}

}  // namespace

VerificationSummary verify_partition(int n, int part, int parts, bool override_cap) {
  if (n != 6 && n != 8 && !override_cap)
    throw Error(Errc::UnsupportedN, "verification supports n = 6 and n = 8");
  VerificationSummary s;
  s.n = n;
  const int target_length = 2 * n - 2;
  enumerate_class_partition(
      n, part, parts,
      [&](const BalancedBipartiteGraph& g) {
        const std::uint64_t ordinal = ++s.member_count;
        try {
          const ExtractionReport rep = extract(g);
          switch (rep.method) {
            case Method::Condition1a: ++s.condition1a; break;
            case Method::Condition1b: ++s.condition1b; break;
            case Method::Condition2: ++s.condition2; break;
            case Method::Structural: ++s.structural; break;
          }
          if (!validate_cycle(g, rep.witness, target_length))
            record_failure(s, ordinal, "extraction witness failed validation");
          if (!omitted_pair_consistent(g, rep))
            record_failure(s, ordinal, "omitted pair does not match the witness");
        } catch (const Error& e) {
          record_failure(s, ordinal, std::string("extract: ") + e.what());
        }

        const auto oracle_cycle = find_cycle_of_length(g, target_length);
        if (oracle_cycle && validate_cycle(g, *oracle_cycle, target_length))
          ++s.oracle_agreements;
        else
          record_failure(s, ordinal, "oracle found no valid cycle of length 2n-2");

        try {
          const auto [outcome, rep2] = check_second_assertion(g);
          switch (outcome) {
            case SecondAssertionOutcome::BipancyclicConfirmed: ++s.second_confirmed; break;
            case SecondAssertionOutcome::Inconclusive: ++s.second_inconclusive; break;
            case SecondAssertionOutcome::Refuted:
              ++s.second_refuted;
              record_failure(s, ordinal, "second assertion refuted");
              break;
          }
          if (rep2.pair && rep2.subgraph_size != n * n / 2 - n + 1)
            record_failure(s, ordinal, "subgraph size identity violated");
        } catch (const Error& e) {
          record_failure(s, ordinal, std::string("second assertion: ") + e.what());
        }
      },
      override_cap);
  return s;
}

void merge_into(VerificationSummary& acc, const VerificationSummary& more) {
  if (acc.n == 0) acc.n = more.n;
  if (acc.n != more.n) throw Error(Errc::InvalidInput, "cannot merge summaries for different n");
  acc.member_count += more.member_count;
  acc.condition1a += more.condition1a;
  acc.condition1b += more.condition1b;
  acc.condition2 += more.condition2;
  acc.structural += more.structural;
  acc.oracle_agreements += more.oracle_agreements;
  acc.second_confirmed += more.second_confirmed;
  acc.second_inconclusive += more.second_inconclusive;
  acc.second_refuted += more.second_refuted;
  acc.failures.insert(acc.failures.end(), more.failures.begin(), more.failures.end());
}

void finalize_summary(VerificationSummary& summary) {
  if (chord_degree(summary.n) == 1) {
    summary.permanent_count = permanent_matching_count(summary.n);
    if (*summary.permanent_count != summary.member_count)
      summary.failures.push_back("member count " + std::to_string(summary.member_count) +
                                 " disagrees with permanent count " +
                                 std::to_string(*summary.permanent_count));
  }
}

VerificationSummary verify_theorem(int n, bool override_cap) {
  VerificationSummary s = verify_partition(n, 0, 1, override_cap);
  finalize_summary(s);
  return s;
}

}  // namespace bigraph
