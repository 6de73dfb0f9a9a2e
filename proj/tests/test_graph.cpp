#include <doctest.h>

#include <functional>
#include <set>

#include "bigraph/census.hpp"
#include "bigraph/graph.hpp"
#include "bigraph/oracle.hpp"
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

}  // namespace

TEST_CASE("from_edge_list builds the circulant fixtures") {
  const auto g = fixtures::g6();
  CHECK(g.n() == 6);
  CHECK(g.size() == 18);
  for (int v = 1; v <= 6; ++v) {
    CHECK(g.degree_x(v) == 3);
    CHECK(g.degree_y(v) == 3);
  }
  CHECK(g.has_edge(1, 1));
  CHECK(g.has_edge(1, 4));
  CHECK(g.has_edge(1, 6));
  CHECK_FALSE(g.has_edge(1, 2));

  const auto dis = fixtures::gdis();
  CHECK(dis.size() == 18);
  CHECK(dis.is_regular());
}

TEST_CASE("from_edge_list rejects bad input") {
  check_error(Errc::IndexOutOfRange, [] { from_edge_list(6, {{1, 7}}); });
  check_error(Errc::IndexOutOfRange, [] { from_edge_list(6, {{0, 1}}); });
  check_error(Errc::DuplicateEdge, [] { from_edge_list(6, {{1, 1}, {1, 1}}); });
  check_error(Errc::InvalidInput, [] { from_edge_list(0, {}); });
  check_error(Errc::UnsupportedN, [] { from_edge_list(65, {}); });
}

TEST_CASE("find_hamilton_cycle returns the canonical labeling on canonical graphs") {
  const auto g = fixtures::g6();
  const auto h = find_hamilton_cycle(g);
  REQUIRE(h.has_value());
  CHECK(h->valid_for(g));
  const std::vector<int> identity{1, 2, 3, 4, 5, 6};
  CHECK(h->x_order == identity);
  CHECK(h->y_order == identity);
}

TEST_CASE("find_hamilton_cycle rejects disconnected and bridged graphs") {
  CHECK_FALSE(find_hamilton_cycle(fixtures::gdis()).has_value());
  CHECK_FALSE(find_hamilton_cycle(fixtures::ges()).has_value());
}

TEST_CASE("find_hamilton_cycle agrees with the full-length cycle oracle") {
  const auto graphs = {fixtures::g6(),  fixtures::g6b(), fixtures::g8m(), fixtures::g8s(),
                       fixtures::gdis(), fixtures::ges(), fixtures::k33()};
  for (const auto& g : graphs)
    CHECK(find_hamilton_cycle(g).has_value() == has_cycle_of_length(g, 2 * g.n()));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = random_member(6, seed);
    CHECK(find_hamilton_cycle(g).has_value());
    CHECK(has_cycle_of_length(g, 12));
  }
}

TEST_CASE("relabel_along_hamilton") {
  const auto g = fixtures::g6();

  SUBCASE("identity labeling reproduces the graph") {
    const auto h = find_hamilton_cycle(g);
    REQUIRE(h.has_value());
    CHECK(relabel_along_hamilton(g, *h) == g);
  }

  SUBCASE("rotation of a circulant reproduces the graph") {
    HamiltonLabeling rot{{3, 4, 5, 6, 1, 2}, {3, 4, 5, 6, 1, 2}};
    REQUIRE(rot.valid_for(g));
    const auto relabeled = relabel_along_hamilton(g, rot);
    CHECK(is_canonically_labeled(relabeled));
    CHECK(relabeled == g);
  }

  SUBCASE("labeling with a non-edge pair is rejected") {
    HamiltonLabeling bad{{1, 2, 3, 4, 5, 6}, {2, 3, 4, 5, 6, 1}};
    CHECK_FALSE(bad.valid_for(g));
    check_error(Errc::InvalidLabeling, [&] { relabel_along_hamilton(g, bad); });
  }

  SUBCASE("non-bijective labeling is rejected") {
    HamiltonLabeling bad{{1, 1, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}};
    CHECK_FALSE(bad.valid_for(g));
  }
}

TEST_CASE("signed_matrix of G6") {
  const auto m = signed_matrix(fixtures::g6());
  const int row1[6] = {1, -1, -1, 1, -1, 1};
  for (int j = 1; j <= 6; ++j) CHECK(m.at(1, j) == row1[j - 1]);
  CHECK(m.all_line_sums_zero());
}

TEST_CASE("signed_matrix demands canonical labeling") {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : fixtures::g6().edges())
    if (e != std::pair<int, int>{1, 1}) edges.push_back(e);
  const auto broken = from_edge_list(6, edges);
  check_error(Errc::NotCanonical, [&] { signed_matrix(broken); });
}

TEST_CASE("graph_from_signed_matrix inverts signed_matrix") {
  const auto g = fixtures::g8s();
  CHECK(graph_from_signed_matrix(signed_matrix(g)) == g);
}

TEST_CASE("validate_cycle") {
  const auto g = fixtures::g6();

  SUBCASE("accepts a genuine 10-cycle") {
    CycleWitness w{{1, 4, 3, 2, 6}, {4, 3, 2, 5, 6}};
    CHECK(validate_cycle(g, w, 10));
    CHECK_FALSE(validate_cycle(g, w, 8));
  }
  SUBCASE("rejects a repeated vertex") {
    CycleWitness w{{1, 4, 3, 2, 1}, {4, 3, 2, 5, 6}};
    CHECK_FALSE(validate_cycle(g, w, 10));
  }
  SUBCASE("rejects a non-edge step") {
    CycleWitness w{{1, 3, 4, 5, 6}, {2, 3, 4, 5, 6}};  // x1 y2 is not an edge of G6
    CHECK_FALSE(validate_cycle(g, w, 10));
  }
  SUBCASE("rejects out-of-range indices and degenerate lengths") {
    CHECK_FALSE(validate_cycle(g, CycleWitness{{1, 7}, {1, 2}}, 4));
    CHECK_FALSE(validate_cycle(g, CycleWitness{{1}, {1}}, 2));
    CHECK_FALSE(validate_cycle(g, CycleWitness{{}, {}}, 0));
    CHECK_FALSE(validate_cycle(g, CycleWitness{{1, 2}, {1}}, 3));
  }
}

TEST_CASE("canonical members keep zero line sums after relabeling") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const int n = seed % 2 ? 6 : 8;
    const auto g = random_member(n, seed);
    const auto h = find_hamilton_cycle(g);
    REQUIRE(h.has_value());
    const auto canon = relabel_along_hamilton(g, *h);
    CHECK(is_canonically_labeled(canon));
    CHECK(signed_matrix(canon).all_line_sums_zero());
  }
}

TEST_CASE("require_class_member error taxonomy") {
  check_error(Errc::TooSmall, [] { require_class_member(fixtures::k33()); });
  check_error(Errc::NotHamiltonian, [] { require_class_member(fixtures::gdis()); });
  check_error(Errc::NotBalancedRegular, [] { require_class_member(fixtures::ges()); });
  // 2-regular hamiltonian on 10 vertices: n/2 would be 2.5
  check_error(Errc::NotBalancedRegular, [] { require_class_member(fixtures::circulant(5, {0, -1})); });
  CHECK_NOTHROW(require_class_member(fixtures::g6()));
}
