#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "ptolemy/algebra.hpp"
#include "ptolemy/polygon.hpp"
#include "ptolemy/tpath.hpp"

namespace ptolemy::testing {

// Octagon with T_1={2,4}, T_2={4,6}, T_3={2,6}, T_4={2,8}, T_5={6,8};
// boundary {k,k+1} is T_{5+k}. The worked example uses M={3,7} from a=3.
inline Triangulation octagon() {
  const std::vector<std::pair<Vertex, Vertex>> d{{2, 4}, {4, 6}, {2, 6}, {2, 8}, {6, 8}};
  return build_triangulation(5, d);
}

// Square with T_1={1,3}; boundary {1,2}=T_2 ... {4,1}=T_5.
inline Triangulation square() {
  const std::vector<std::pair<Vertex, Vertex>> d{{1, 3}};
  return build_triangulation(1, d);
}

// Monomial over `num_variables` variables from (index, exponent) pairs.
inline ExponentVector exponents(int num_variables, std::initializer_list<std::pair<int, int>> f) {
  ExponentVector e(static_cast<std::size_t>(num_variables), 0);
  for (const auto& [i, k] : f) e[static_cast<std::size_t>(i - 1)] += k;
  return e;
}

inline LaurentPolynomial polynomial(
    int num_variables, std::initializer_list<std::initializer_list<std::pair<int, int>>> terms) {
  LaurentPolynomial p(num_variables);
  for (const auto& t : terms) p.add_term(exponents(num_variables, t), 1);
  return p;
}

// x7 x11/x3 + x7 x2 x12/(x1 x5) + x8 x4 x11/(x1 x5) + x8 x3 x12/(x1 x5)
//   + x7 x2 x4 x11/(x1 x3 x5)
inline LaurentPolynomial octagon_expansion() {
  return polynomial(13, {{{7, 1}, {11, 1}, {3, -1}},
                         {{7, 1}, {2, 1}, {12, 1}, {1, -1}, {5, -1}},
                         {{8, 1}, {4, 1}, {11, 1}, {1, -1}, {5, -1}},
                         {{8, 1}, {3, 1}, {12, 1}, {1, -1}, {5, -1}},
                         {{7, 1}, {2, 1}, {4, 1}, {11, 1}, {1, -1}, {3, -1}, {5, -1}}});
}

// The five listed T-paths, with a=3, f=2, c=4, d=6, e=8, b=7.
inline std::vector<TPath> octagon_paths() {
  return {
      {{3, 2, 6, 7}, {7, 3, 11}},
      {{3, 2, 4, 6, 8, 7}, {7, 1, 2, 5, 12}},
      {{3, 4, 2, 8, 6, 7}, {8, 1, 4, 5, 11}},
      {{3, 4, 2, 6, 8, 7}, {8, 1, 3, 5, 12}},
      {{3, 2, 4, 6, 2, 8, 6, 7}, {7, 1, 2, 3, 4, 5, 11}},
  };
}

// Every diagonal of the N-gon.
inline std::vector<Arc> polygon_diagonals(int vertex_count) {
  std::vector<Arc> out;
  for (Vertex u = 1; u <= vertex_count; ++u) {
    for (Vertex v = u + 1; v <= vertex_count; ++v) {
      if (!Arc(u, v).is_boundary(vertex_count)) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace ptolemy::testing
