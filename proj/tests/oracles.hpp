#pragma once

// Reference implementations used only by tests. None of these share code
// paths with the library routines they check.

#include <cmath>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "ptolemy/algebra.hpp"

namespace ptolemy::testing {

// Segment intersection on the actual regular polygon in the plane. Only
// ever used for polygons small enough that the interior intersection test
// has a wide margin.
inline bool crosses_geometric(int u1, int v1, int u2, int v2, int vertex_count) {
  auto point = [&](int v) {
    const double angle = 2.0 * std::numbers::pi * (v - 1) / vertex_count;
    return std::pair{std::cos(angle), std::sin(angle)};
  };
  if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) return false;
  const auto [ax, ay] = point(u1);
  const auto [bx, by] = point(v1);
  const auto [cx, cy] = point(u2);
  const auto [dx, dy] = point(v2);
  auto orient = [](double px, double py, double qx, double qy, double rx, double ry) {
    return (qx - px) * (ry - py) - (qy - py) * (rx - px);
  };
  const double o1 = orient(ax, ay, bx, by, cx, cy);
  const double o2 = orient(ax, ay, bx, by, dx, dy);
  const double o3 = orient(cx, cy, dx, dy, ax, ay);
  const double o4 = orient(cx, cy, dx, dy, bx, by);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

// Number of maximal non-crossing diagonal sets of an N-gon by plain
// backtracking over the diagonal list.
inline std::size_t count_triangulations_backtracking(int vertex_count) {
  std::vector<std::pair<int, int>> diagonals;
  for (int u = 1; u <= vertex_count; ++u) {
    for (int v = u + 2; v <= vertex_count; ++v) {
      if (u == 1 && v == vertex_count) continue;
      diagonals.emplace_back(u, v);
    }
  }
  const std::size_t needed = static_cast<std::size_t>(vertex_count - 3);
  std::vector<std::pair<int, int>> chosen;
  std::size_t count = 0;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() == needed) {
      ++count;
      return;
    }
    for (std::size_t k = start; k < diagonals.size(); ++k) {
      bool ok = true;
      for (const auto& [u, v] : chosen) {
        if (crosses_geometric(u, v, diagonals[k].first, diagonals[k].second, vertex_count)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(diagonals[k]);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

// Term-by-term product accumulated in a flat list, merged by linear search.
inline std::vector<std::pair<ExponentVector, Integer>> naive_product(
    const LaurentPolynomial& f, const LaurentPolynomial& g) {
  std::vector<std::pair<ExponentVector, Integer>> acc;
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      ExponentVector e(ef.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
      bool merged = false;
      for (auto& [ea, ca] : acc) {
        if (ea == e) {
          ca += cf * cg;
          merged = true;
          break;
        }
      }
      if (!merged) acc.emplace_back(e, cf * cg);
    }
  }
  std::erase_if(acc, [](const auto& t) { return t.second == 0; });
  return acc;
}

inline LaurentPolynomial random_polynomial(std::mt19937& rng, int num_variables, int max_terms) {
  std::uniform_int_distribution<int> term_count(0, max_terms);
  std::uniform_int_distribution<int> exponent(-2, 2);
  std::uniform_int_distribution<int> coefficient(-5, 5);
  LaurentPolynomial f(num_variables);
  const int count = term_count(rng);
  for (int t = 0; t < count; ++t) {
    ExponentVector e(static_cast<std::size_t>(num_variables));
    for (int& x : e) x = exponent(rng);
    f.add_term(e, coefficient(rng));
  }
  return f;
}

inline std::vector<Rational> random_point(std::mt19937& rng, int num_variables) {
  std::uniform_int_distribution<int> num(1, 9);
  std::vector<Rational> p;
  for (int i = 0; i < num_variables; ++i) {
    Rational q(num(rng), num(rng));
    q.canonicalize();
    p.push_back(q);
  }
  return p;
}

}  // namespace ptolemy::testing
