#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ptolemy/errors.hpp"
#include "ptolemy/polygon.hpp"

using namespace ptolemy;
using ptolemy::testing::octagon;
using ptolemy::testing::square;

TEST_SUITE("polygon") {

TEST_CASE("crossing predicate on the octagon") {
  CHECK(crosses(Arc(2, 4), Arc(3, 7), 8));
  CHECK_FALSE(crosses(Arc(2, 8), Arc(3, 7), 8));
  CHECK_FALSE(crosses(Arc(2, 4), Arc(4, 6), 8));
  CHECK_FALSE(crosses(Arc(3, 7), Arc(3, 7), 8));
  CHECK_THROWS_AS(crosses(Arc(2, 9), Arc(3, 7), 8), InputError);
  CHECK_THROWS_AS(Arc(3, 3), InputError);
  CHECK_THROWS_AS(Arc(0, 3), InputError);
}

TEST_CASE("crossing predicate agrees with plane geometry") {
  for (int count = 4; count <= 10; ++count) {
    for (Vertex u1 = 1; u1 <= count; ++u1) {
      for (Vertex v1 = u1 + 1; v1 <= count; ++v1) {
        const Arc d1(u1, v1);
        if (d1.is_boundary(count)) {
          for (Vertex u2 = 1; u2 <= count; ++u2) {
            for (Vertex v2 = u2 + 1; v2 <= count; ++v2) {
              CHECK_FALSE(crosses(d1, Arc(u2, v2), count));
            }
          }
        }
        for (Vertex u2 = 1; u2 <= count; ++u2) {
          for (Vertex v2 = u2 + 1; v2 <= count; ++v2) {
            const Arc d2(u2, v2);
            const bool expected = ptolemy::testing::crosses_geometric(u1, v1, u2, v2, count);
            REQUIRE(crosses(d1, d2, count) == expected);
            REQUIRE(crosses(d2, d1, count) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("octagon labeling") {
  const Triangulation t = octagon();
  CHECK(t.rank() == 5);
  CHECK(t.vertex_count() == 8);
  CHECK(t.edge_count() == 13);
  CHECK(t.arc(3) == Arc(2, 6));
  CHECK(t.arc(6) == Arc(1, 2));
  CHECK(t.arc(7) == Arc(2, 3));
  CHECK(t.arc(13) == Arc(1, 8));
  CHECK(t.label_of(Arc(6, 7)) == 11);
  CHECK(t.label_of(Arc(3, 7)) == std::nullopt);
  CHECK(t.triangles().size() == 6);
  CHECK(std::vector<Label>(t.incident(2).begin(), t.incident(2).end()) ==
        std::vector<Label>{1, 3, 4, 6, 7});
  CHECK_THROWS_AS(t.arc(14), InputError);
}

TEST_CASE("build_triangulation validation") {
  using P = std::vector<std::pair<Vertex, Vertex>>;
  const Triangulation sq = square();
  CHECK(sq.arc(1) == Arc(1, 3));
  CHECK(sq.arc(2) == Arc(1, 2));
  CHECK(sq.arc(5) == Arc(1, 4));

  CHECK_NOTHROW(build_triangulation(2, P{{1, 3}, {3, 5}}));
  CHECK_NOTHROW(build_triangulation(2, P{{1, 3}, {1, 4}}));
  CHECK_THROWS_AS(build_triangulation(2, P{{1, 3}, {2, 4}}), InputError);
  CHECK_THROWS_AS(build_triangulation(2, P{{1, 3}}), InputError);
  CHECK_THROWS_AS(build_triangulation(2, P{{1, 3}, {3, 1}}), InputError);
  CHECK_THROWS_AS(build_triangulation(2, P{{1, 3}, {1, 2}}), InputError);
  CHECK_THROWS_AS(build_triangulation(2, P{{1, 3}, {5, 1}}), InputError);
  CHECK_THROWS_AS(build_triangulation(2, P{{1, 3}, {1, 6}}), InputError);

  const std::vector<Label> order{2, 1};
  const Triangulation relabeled =
      build_triangulation(2, P{{1, 3}, {1, 4}}, std::span<const Label>(order));
  CHECK(relabeled.arc(1) == Arc(1, 4));
  CHECK(relabeled.arc(2) == Arc(1, 3));
  const std::vector<Label> bad{1, 1};
  CHECK_THROWS_AS(build_triangulation(2, P{{1, 3}, {1, 4}}, std::span<const Label>(bad)),
                  InputError);
}

TEST_CASE("snake triangulation") {
  CHECK(snake_triangulation(1).arc(1) == Arc(2, 4));
  const Triangulation t2 = snake_triangulation(2);
  CHECK(t2.arc(1) == Arc(2, 4));
  CHECK(t2.arc(2) == Arc(1, 4));
  const Triangulation t3 = snake_triangulation(3);
  CHECK(t3.arc(1) == Arc(2, 4));
  CHECK(t3.arc(2) == Arc(1, 4));
  CHECK(t3.arc(3) == Arc(1, 5));
  // Boundary labels T_4..T_9 around the hexagon.
  CHECK(t3.arc(4) == Arc(1, 2));
  CHECK(t3.arc(9) == Arc(1, 6));
  for (int n = 1; n <= 12; ++n) CHECK_NOTHROW(snake_triangulation(n));
  CHECK_THROWS_AS(snake_triangulation(0), InputError);
}

TEST_CASE("quadrilateral_of") {
  const FlipQuadrilateral sq = quadrilateral_of(square(), 1);
  CHECK(sq.replacement == Arc(2, 4));
  CHECK(sq.corners == std::array<Vertex, 4>{1, 2, 3, 4});
  // Opposite pairs ({1,2},{3,4}) = (T2,T4) and ({2,3},{4,1}) = (T3,T5).
  CHECK(sq.sides == std::array<Label, 4>{2, 3, 4, 5});

  const FlipQuadrilateral oct = quadrilateral_of(octagon(), 3);
  CHECK(oct.replacement == Arc(4, 8));
  CHECK(oct.corners == std::array<Vertex, 4>{2, 4, 6, 8});
  CHECK(oct.sides == std::array<Label, 4>{1, 2, 5, 4});

  const FlipQuadrilateral hex = quadrilateral_of(snake_triangulation(3), 2);
  CHECK(hex.replacement == Arc(2, 5));
  CHECK(hex.corners == std::array<Vertex, 4>{1, 2, 4, 5});
  CHECK(hex.sides == std::array<Label, 4>{4, 1, 7, 3});

  CHECK_THROWS_AS(quadrilateral_of(octagon(), 6), InputError);
  CHECK_THROWS_AS(quadrilateral_of(octagon(), 0), InputError);
}

TEST_CASE("flip") {
  CHECK(flip(square(), 1).arc(1) == Arc(2, 4));
  const Triangulation flipped = flip(octagon(), 3);
  CHECK(flipped.sorted_diagonals() ==
        std::vector<Arc>{Arc(2, 4), Arc(2, 8), Arc(4, 6), Arc(4, 8), Arc(6, 8)});
  CHECK(flipped.arc(3) == Arc(4, 8));
  CHECK_THROWS_AS(flip(octagon(), 9), InputError);

  for (int n = 1; n <= 5; ++n) {
    for (const Triangulation& t : all_triangulations(n)) {
      for (Label k = 1; k <= n; ++k) {
        const Triangulation once = flip(t, k);
        int changed = 0;
        for (Label l = 1; l <= once.edge_count(); ++l) changed += once.arc(l) != t.arc(l) ? 1 : 0;
        REQUIRE(changed == 1);
        REQUIRE(flip(once, k) == t);
      }
    }
  }
}

TEST_CASE("closer_to_a") {
  CHECK(closer_to_a(Arc(2, 4), Arc(2, 6), 3, 7, 8) == CrossingOrder::before);
  CHECK(closer_to_a(Arc(2, 6), Arc(2, 4), 3, 7, 8) == CrossingOrder::after);
  CHECK(closer_to_a(Arc(2, 6), Arc(6, 8), 3, 7, 8) == CrossingOrder::before);
  CHECK(closer_to_a(Arc(2, 6), Arc(6, 8), 7, 3, 8) == CrossingOrder::after);
  // Preconditions: distinct, both crossing M, not crossing each other.
  CHECK_THROWS_AS(closer_to_a(Arc(2, 4), Arc(2, 4), 3, 7, 8), InputError);
  CHECK_THROWS_AS(closer_to_a(Arc(2, 4), Arc(4, 6), 3, 7, 8), InputError);
  CHECK_THROWS_AS(closer_to_a(Arc(2, 4), Arc(1, 3), 3, 7, 8), InputError);
  CHECK_THROWS_AS(closer_to_a(Arc(2, 4), Arc(2, 6), 3, 4, 8), InputError);
}

TEST_CASE("crossing_diagonals_ordered") {
  const Triangulation t = octagon();
  CHECK(crossing_diagonals_ordered(t, 3, 7) == std::vector<Label>{1, 3, 5});
  CHECK(crossing_diagonals_ordered(t, 7, 3) == std::vector<Label>{5, 3, 1});
  CHECK(crossing_diagonals_ordered(t, 4, 6).empty());
  CHECK_THROWS_AS(crossing_diagonals_ordered(t, 3, 4), InputError);
  CHECK_THROWS_AS(crossing_diagonals_ordered(t, 3, 3), InputError);
}

TEST_CASE("crossing order is a strict total order on crossing diagonals") {
  for (int n = 1; n <= 5; ++n) {
    const int count = n + 3;
    for (const Triangulation& t : all_triangulations(n)) {
      for (const Arc& m : ptolemy::testing::polygon_diagonals(count)) {
        for (Vertex a : {m.lo(), m.hi()}) {
          const Vertex b = m.other(a);
          const std::vector<Label> order = crossing_diagonals_ordered(t, a, b);
          std::vector<Label> reversed = crossing_diagonals_ordered(t, b, a);
          std::reverse(reversed.begin(), reversed.end());
          REQUIRE(order == reversed);
          for (std::size_t i = 0; i < order.size(); ++i) {
            for (std::size_t j = 0; j < order.size(); ++j) {
              if (i == j) continue;
              const CrossingOrder expected = i < j ? CrossingOrder::before : CrossingOrder::after;
              REQUIRE(closer_to_a(t.arc(order[i]), t.arc(order[j]), a, b, count) == expected);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("crossing quadrilateral of the worked example") {
  const CrossingQuadrilateral q = crossing_quadrilateral(octagon(), 3, 7);
  CHECK(q.i0 == 1);
  CHECK(q.c == 4);
  CHECK(q.d == 2);
  CHECK(q.i1 == 7);
  CHECK(q.i1_prime == 8);
  CHECK(q.side_l == Arc(4, 7));
  CHECK(q.side_l_prime == Arc(2, 7));
  CHECK_THROWS_AS(crossing_quadrilateral(octagon(), 4, 6), InputError);
}

TEST_CASE("all_triangulations matches backtracking counts") {
  const std::size_t expected[] = {2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 6; ++n) {
    const std::vector<Triangulation> all = all_triangulations(n);
    REQUIRE(ptolemy::testing::count_triangulations_backtracking(n + 3) == expected[n - 1]);
    CHECK(all.size() == expected[n - 1]);
    std::set<std::vector<Arc>> distinct;
    for (const Triangulation& t : all) {
      distinct.insert(t.sorted_diagonals());
      CHECK(t.rank() == n);
      CHECK(t.triangles().size() == static_cast<std::size_t>(n + 1));
    }
    CHECK(distinct.size() == all.size());
  }
  CHECK_THROWS_AS(all_triangulations(0), InputError);
  CHECK_THROWS_AS(all_triangulations(9), ResourceError);
}

TEST_CASE("flip graphs") {
  const FlipGraph g1 = flip_graph(1);
  CHECK(g1.nodes.size() == 2);
  CHECK(g1.edges.size() == 1);

  const FlipGraph g2 = flip_graph(2);
  REQUIRE(g2.nodes.size() == 5);
  REQUIRE(g2.edges.size() == 5);
  // A 5-cycle: connected and 2-regular.
  std::vector<int> degree(5, 0);
  for (const auto& [i, j] : g2.edges) {
    ++degree[i];
    ++degree[j];
  }
  CHECK(std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; }));
  std::vector<bool> seen(5, false);
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = true;
    for (const auto& [i, j] : g2.edges) {
      if (i == v) stack.push_back(j);
      if (j == v) stack.push_back(i);
    }
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }));
}

}  // TEST_SUITE
