#pragma once

// Seed data of a triangulation (exchange matrix, initial coefficients,
// exchange relations) and a cluster-variable computation that only applies
// Ptolemy exchange relations. The latter never looks at T-paths and serves
// as the independent reference for the path expansion.

#include <cstddef>
#include <string>
#include <vector>

#include "ptolemy/algebra.hpp"
#include "ptolemy/polygon.hpp"

namespace ptolemy {

// (2n+3) x n matrix with entries in {-1, 0, 1}; rows and columns 1-based.
class ExchangeMatrix {
 public:
  ExchangeMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, int value) { entries_[index(i, j)] = value; }

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  std::size_t index(int i, int j) const;

  int rows_;
  int cols_;
  std::vector<int> entries_;
};

// One line per row, entries separated by single spaces.
std::string to_string(const ExchangeMatrix& b);

// b_ij = +1 when T_i and T_j are sides of a common triangle and T_j comes
// right after T_i going clockwise around that triangle; -1 for the reverse.
ExchangeMatrix exchange_matrix(const Triangulation& t);

struct CoefficientPair {
  TropicalMonomial plus;
  TropicalMonomial minus;
};

// p_j^+ (resp. p_j^-) is the product of the boundary variables x_i with
// b_ij = +1 (resp. -1).
std::vector<CoefficientPair> initial_coefficients(const Triangulation& t);
std::vector<CoefficientPair> initial_coefficients(const Triangulation& t,
                                                  const ExchangeMatrix& b);

// x_k x_{k'} = x_a x_c + x_b x_d. (a, c) and (b, d) are the opposite side
// pairs of the flip quadrilateral, taken from quadrilateral_of's side order.
struct ExchangeRelation {
  Label k;
  Arc replacement;
  Label a;
  Label b;
  Label c;
  Label d;
};

ExchangeRelation exchange_relation(const Triangulation& t, Label k);

// Number of diagonals of T crossing M.
int crossing_count(const Triangulation& t, const Arc& m);

// x_M by repeated exchange relations x_M x_{i0} = x_{i1} x_L + x_{i1'} x_{L'},
// recursing on L and L' until every arc lies in T. `a` picks the endpoint
// from which the nearest crossing diagonal is taken.
LaurentPolynomial cluster_variable_recursive(const Triangulation& t, const Arc& m, Vertex a);
LaurentPolynomial cluster_variable_recursive(const Triangulation& t, const Arc& m);

}  // namespace ptolemy
