#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "ptolemy/errors.hpp"
#include "ptolemy/expansion.hpp"
#include "ptolemy/tpath.hpp"

using namespace ptolemy;
using ptolemy::testing::exponents;

namespace {

std::optional<TPathCondition> violation(const Triangulation& t, Vertex a, Vertex b, TPath p) {
  return check_t_path(t, a, b, p).violated;
}

// Every oriented diagonal M not in T, for each triangulation up to rank n.
template <class F>
void for_each_instance(int max_rank, F&& f) {
  for (int n = 1; n <= max_rank; ++n) {
    for (const Triangulation& t : all_triangulations(n)) {
      for (const Arc& m : ptolemy::testing::polygon_diagonals(t.vertex_count())) {
        if (t.contains(m)) continue;
        f(t, m.lo(), m.hi());
        f(t, m.hi(), m.lo());
      }
    }
  }
}

}  // namespace

TEST_SUITE("tpath") {

TEST_CASE("validator on the octagon") {
  const Triangulation t = ptolemy::testing::octagon();
  for (const TPath& p : ptolemy::testing::octagon_paths()) {
    CHECK(is_valid_t_path(t, 3, 7, p));
    CHECK(check_t_path(t, 3, 7, p).valid());
  }

  // Label 4 does not join 2 and 6.
  CHECK(violation(t, 3, 7, {{3, 2, 6, 7}, {7, 4, 11}}) == TPathCondition::incidence);
  // T_4 = {2,8} sits at an even position but misses M.
  CHECK(violation(t, 3, 7, {{3, 2, 8, 7}, {7, 4, 12}}) == TPathCondition::even_edges_cross);
  CHECK(violation(t, 3, 7, {{3, 2, 4, 6, 7}, {7, 1, 2, 11}}) == TPathCondition::odd_length);
  CHECK(violation(t, 3, 7, {{3, 2, 6, 2, 6, 7}, {7, 3, 3, 3, 11}}) ==
        TPathCondition::distinct_edges);
  CHECK(violation(t, 3, 7, {{3, 2, 6}, {7, 3}}) == TPathCondition::endpoints);
  // Crosses T_3 before T_1, although T_1 is nearer to a.
  CHECK(violation(t, 3, 7, {{3, 2, 6, 4, 2, 8, 6, 7}, {7, 3, 2, 1, 4, 5, 11}}) ==
        TPathCondition::crossing_order);

  CHECK(condition_number(TPathCondition::even_edges_cross) == 5);
  CHECK(!condition_name(TPathCondition::crossing_order).empty());
}

TEST_CASE("validator rejects malformed queries") {
  const Triangulation t = ptolemy::testing::octagon();
  CHECK_THROWS_AS(check_t_path(t, 3, 7, {{3, 2, 7}, {7, 14}}), InputError);
  CHECK_THROWS_AS(check_t_path(t, 3, 7, {{3, 2, 7}, {0, 7}}), InputError);
  CHECK_THROWS_AS(check_t_path(t, 3, 4, {{3, 4}, {8}}), InputError);
  CHECK_THROWS_AS(check_t_path(t, 3, 3, {{3}, {}}), InputError);
  CHECK_THROWS_AS(enumerate_t_paths(t, 8, 1), InputError);
}

TEST_CASE("octagon paths") {
  const Triangulation t = ptolemy::testing::octagon();
  const auto paths = enumerate_t_paths(t, 3, 7);
  REQUIRE(paths.size() == 5);
  auto expected = ptolemy::testing::octagon_paths();
  std::sort(expected.begin(), expected.end());
  CHECK(paths == expected);
  CHECK(std::is_sorted(paths.begin(), paths.end()));
  CHECK(to_string(paths.front()) == "(3,2,4,6,2,8,6,7 | 7,1,2,3,4,5,11)");
}

TEST_CASE("square paths") {
  const Triangulation t = ptolemy::testing::square();
  const auto paths = enumerate_t_paths(t, 2, 4);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0] == TPath{{2, 1, 3, 4}, {2, 1, 4}});
  CHECK(paths[1] == TPath{{2, 3, 1, 4}, {3, 1, 5}});
}

TEST_CASE("an arc of T has the single one-edge path") {
  const Triangulation t = ptolemy::testing::octagon();
  const auto paths = enumerate_t_paths(t, 2, 6);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0] == TPath{{2, 6}, {3}});

  const auto side = enumerate_t_paths_for_arc(t, 4, 5);
  REQUIRE(side.size() == 1);
  CHECK(side[0] == TPath{{4, 5}, {9}});
}

TEST_CASE("path weights") {
  const Triangulation t = ptolemy::testing::octagon();
  const Monomial w = path_weight(t, {{3, 2, 6, 7}, {7, 3, 11}});
  CHECK(w.coefficient == 1);
  CHECK(w.exponents == exponents(13, {{7, 1}, {11, 1}, {3, -1}}));

  const Monomial long_path = path_weight(t, {{3, 2, 4, 6, 2, 8, 6, 7}, {7, 1, 2, 3, 4, 5, 11}});
  CHECK(long_path.exponents ==
        exponents(13, {{7, 1}, {2, 1}, {4, 1}, {11, 1}, {1, -1}, {3, -1}, {5, -1}}));
}

TEST_CASE("pruned search matches brute force") {
  std::size_t instances = 0;
  for_each_instance(3, [&](const Triangulation& t, Vertex a, Vertex b) {
    REQUIRE(enumerate_t_paths(t, a, b) == brute_force_t_paths(t, a, b));
    ++instances;
  });
  CHECK(instances == 2 * (2 * 1 + 5 * 3 + 14 * 6));
  CHECK_THROWS_AS(brute_force_t_paths(snake_triangulation(5), 1, 4), ResourceError);
}

TEST_CASE("structural properties of enumerated paths") {
  for_each_instance(4, [](const Triangulation& t, Vertex a, Vertex b) {
    const auto paths = enumerate_t_paths(t, a, b);
    const Arc m(a, b);
    const int crossings = static_cast<int>(crossing_diagonals_ordered(t, a, b).size());
    REQUIRE(!paths.empty());

    std::set<ExponentVector> weights;
    for (const TPath& p : paths) {
      REQUIRE(is_valid_t_path(t, a, b, p));
      REQUIRE(p.length() % 2 == 1);
      REQUIRE(p.length() <= 2 * crossings + 1);
      int even_edges = 0;
      for (int k = 1; k < p.length(); k += 2) {
        const Label e = p.labels[static_cast<std::size_t>(k)];
        REQUIRE(t.is_diagonal_label(e));
        REQUIRE(crosses(t.arc(e), m, t.vertex_count()));
        ++even_edges;
      }
      REQUIRE(even_edges <= crossings);
      weights.insert(path_weight(t, p).exponents);
    }
    REQUIRE(weights.size() == paths.size());
  });
}

TEST_CASE("reversal gives the same number of paths") {
  for_each_instance(4, [](const Triangulation& t, Vertex a, Vertex b) {
    REQUIRE(enumerate_t_paths(t, a, b).size() == enumerate_t_paths(t, b, a).size());
  });
}

}  // TEST_SUITE
