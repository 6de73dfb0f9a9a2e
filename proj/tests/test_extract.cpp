#include <doctest.h>

#include <functional>
#include <set>

#include "bigraph/census.hpp"
#include "bigraph/extract.hpp"
#include "bigraph/graph.hpp"
#include "fixtures.hpp"

using namespace bigraph;

namespace {

void check_error(Errc expected, const std::function<void()>& f) {
  try {
    f();
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == expected);
  }
}

// The witness must miss exactly the omitted pair.
void check_omitted(const BalancedBipartiteGraph& g, const ExtractionReport& rep) {
  std::set<int> xs(rep.witness.xs.begin(), rep.witness.xs.end());
  std::set<int> ys(rep.witness.ys.begin(), rep.witness.ys.end());
  CHECK(static_cast<int>(xs.size()) == g.n() - 1);
  CHECK(static_cast<int>(ys.size()) == g.n() - 1);
  CHECK(xs.count(rep.omitted.first) == 0);
  CHECK(ys.count(rep.omitted.second) == 0);
}

}  // namespace

TEST_CASE("condition 1 scan") {
  SUBCASE("G8m fires the forward chord at i=1") {
    const auto g = fixtures::g8m();
    const auto rep = extract_by_condition1(g);
    REQUIRE(rep.has_value());
    CHECK(rep->method == Method::Condition1b);
    CHECK(std::get<Condition1Indices>(rep->indices).i == 1);
    CHECK(rep->witness.xs == std::vector<int>{1, 3, 4, 5, 6, 7, 8});
    CHECK(rep->witness.ys == std::vector<int>{2, 3, 4, 5, 6, 7, 8});
    CHECK(validate_cycle(g, rep->witness, 14));
    CHECK(rep->omitted == std::pair<int, int>{2, 1});
    CHECK(rep->omitted_adjacent);
    check_omitted(g, *rep);
  }
  SUBCASE("a backward chord fires condition 1a") {
    const auto g = fixtures::circulant(6, {0, -1, -2});
    const auto rep = extract_by_condition1(g);
    REQUIRE(rep.has_value());
    CHECK(rep->method == Method::Condition1a);
    CHECK(std::get<Condition1Indices>(rep->indices).i == 1);
    CHECK(rep->witness.xs == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(rep->witness.ys == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(validate_cycle(g, rep->witness, 10));
    CHECK(rep->omitted == std::pair<int, int>{6, 6});
    CHECK(rep->omitted_adjacent);
  }
  SUBCASE("G6 has neither chord") { CHECK_FALSE(extract_by_condition1(fixtures::g6()).has_value()); }
  SUBCASE("G6b fires at i=1") {
    const auto g = fixtures::g6b();
    const auto rep = extract_by_condition1(g);
    REQUIRE(rep.has_value());
    CHECK(rep->method == Method::Condition1b);
    CHECK(rep->witness.xs == std::vector<int>{1, 3, 4, 5, 6});
    CHECK(rep->witness.ys == std::vector<int>{2, 3, 4, 5, 6});
    CHECK(validate_cycle(g, rep->witness, 10));
    CHECK(rep->omitted == std::pair<int, int>{2, 1});
    CHECK(rep->omitted_adjacent);
  }
  SUBCASE("input validation") {
    check_error(Errc::InvalidInput, [] { extract_by_condition1(fixtures::circulant(4, {0, -1})); });
    check_error(Errc::InvalidInput, [] { extract_by_condition1(fixtures::gdis()); });
  }
}

TEST_CASE("condition 2 scan") {
  SUBCASE("G6 fires at (1, 4) with the documented witness") {
    const auto g = fixtures::g6();
    const auto rep = extract_by_condition2(g);
    REQUIRE(rep.has_value());
    CHECK(rep->method == Method::Condition2);
    const auto idx = std::get<Condition2Indices>(rep->indices);
    CHECK(idx.i == 1);
    CHECK(idx.j == 4);
    CHECK(rep->witness.xs == std::vector<int>{1, 4, 3, 2, 6});
    CHECK(rep->witness.ys == std::vector<int>{4, 3, 2, 5, 6});
    CHECK(validate_cycle(g, rep->witness, 10));
    CHECK(rep->omitted == std::pair<int, int>{5, 1});
    CHECK_FALSE(rep->omitted_adjacent);
    check_omitted(g, *rep);
  }
  SUBCASE("no band chords in G6b") { CHECK_FALSE(extract_by_condition2(fixtures::g6b()).has_value()); }
  SUBCASE("the structural fixture has no parallel chords") {
    CHECK_FALSE(extract_by_condition2(fixtures::g8s()).has_value());
  }
}

TEST_CASE("structural constraint checks") {
  SUBCASE("G8s satisfies everything") {
    const auto chk = check_structural_constraints(fixtures::g8s());
    CHECK(chk.border_ok);
    CHECK(chk.plus_propagation_ok);
    CHECK(chk.minus_propagation_ok);
    CHECK(chk.band_sums_ok);
    CHECK(chk.all_hold());
    REQUIRE(chk.l.has_value());
    CHECK(*chk.l == 1);
  }
  SUBCASE("G6 breaks sign propagation at (1, 4)") {
    const auto chk = check_structural_constraints(fixtures::g6());
    CHECK(chk.border_ok);
    CHECK_FALSE(chk.plus_propagation_ok);
    REQUIRE(chk.plus_violation.has_value());
    CHECK(*chk.plus_violation == std::pair<int, int>{1, 4});
    CHECK_FALSE(chk.band_sums_ok);
    CHECK_FALSE(chk.l.has_value());
  }
  SUBCASE("G6b breaks the border at (1, 2)") {
    const auto chk = check_structural_constraints(fixtures::g6b());
    CHECK_FALSE(chk.border_ok);
    REQUIRE(chk.border_violation.has_value());
    CHECK(*chk.border_violation == std::pair<int, int>{1, 2});
  }
  SUBCASE("regularity is required") {
    check_error(Errc::NotRegular, [] { check_structural_constraints(fixtures::ges()); });
  }
}

TEST_CASE("structural extraction") {
  SUBCASE("G8s yields (i0, k) = (2, 4)") {
    const auto g = fixtures::g8s();
    const auto rep = extract_structural(g);
    CHECK(rep.method == Method::Structural);
    const auto idx = std::get<StructuralIndices>(rep.indices);
    CHECK(idx.i0 == 2);
    CHECK(idx.k == 4);
    CHECK(idx.l == 1);
    CHECK(rep.witness.xs == std::vector<int>{1, 4, 5, 6, 2, 7, 8});
    CHECK(rep.witness.ys == std::vector<int>{3, 4, 5, 2, 6, 7, 8});
    CHECK(validate_cycle(g, rep.witness, 14));
    CHECK(rep.omitted == std::pair<int, int>{3, 1});
    CHECK_FALSE(rep.omitted_adjacent);
    check_omitted(g, rep);
  }
  SUBCASE("the (-,+,+,-) variant anchors at (1, 3)") {
    const auto g = graph_from_signed_matrix(matrix_from_first_row_band(8, {-1, 1, 1, -1}));
    const auto rep = extract_structural(g);
    const auto idx = std::get<StructuralIndices>(rep.indices);
    CHECK(idx.i0 == 1);
    CHECK(idx.k == 3);
    CHECK(validate_cycle(g, rep.witness, 14));
  }
  SUBCASE("n = 6 cannot satisfy the band sums") {
    check_error(Errc::PreconditionFailed, [] { extract_structural(fixtures::g6()); });
  }
}

TEST_CASE("extract dispatches the branches in order") {
  CHECK(extract(fixtures::g6()).method == Method::Condition2);
  CHECK(extract(fixtures::g6b()).method == Method::Condition1b);
  CHECK(extract(fixtures::g8m()).method == Method::Condition1b);
  CHECK(extract(fixtures::g8s()).method == Method::Structural);
}

TEST_CASE("extract validates class membership") {
  check_error(Errc::NotHamiltonian, [] { extract(fixtures::gdis()); });
  check_error(Errc::TooSmall, [] { extract(fixtures::k33()); });
  check_error(Errc::NotBalancedRegular, [] { extract(fixtures::circulant(5, {0, -1})); });
  check_error(Errc::NotBalancedRegular, [] { extract(fixtures::ges()); });
}

TEST_CASE("extract reports witnesses in the caller's labeling") {
  // Scramble a member away from its canonical labeling and make sure the
  // returned witness still certifies against the scrambled input.
  const auto g = fixtures::g8s();
  const int n = g.n();
  std::vector<std::pair<int, int>> edges;
  for (const auto& [i, j] : g.edges()) edges.emplace_back(n + 1 - i, wrap_index(j + 2, n));
  const auto scrambled = from_edge_list(n, edges);
  CHECK_FALSE(is_canonically_labeled(scrambled));
  const auto rep = extract(scrambled);
  CHECK(validate_cycle(scrambled, rep.witness, 2 * n - 2));
  check_omitted(scrambled, rep);
  CHECK(rep.omitted_adjacent == scrambled.has_edge(rep.omitted.first, rep.omitted.second));
}

TEST_CASE("extraction invariants over random members") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = seed % 2 ? 6 : 8;
    const auto g = random_member(n, seed);
    const auto rep = extract(g);
    CHECK(validate_cycle(g, rep.witness, 2 * n - 2));
    check_omitted(g, rep);
    switch (rep.method) {
      case Method::Condition1a:
      case Method::Condition1b:
        CHECK(rep.omitted_adjacent);
        break;
      case Method::Structural:
        CHECK_FALSE(rep.omitted_adjacent);
        CHECK(n % 4 == 0);
        break;
      case Method::Condition2:
        break;
    }
    if (n % 4 != 0) CHECK(rep.method != Method::Structural);
  }
}
