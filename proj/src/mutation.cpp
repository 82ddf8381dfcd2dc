#include "ptolemy/mutation.hpp"

#include <map>
#include <sstream>

#include "ptolemy/errors.hpp"

namespace ptolemy {

ExchangeMatrix::ExchangeMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows * cols), 0) {}

std::size_t ExchangeMatrix::index(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw InputError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range");
  }
  return static_cast<std::size_t>((i - 1) * cols_ + (j - 1));
}

std::string to_string(const ExchangeMatrix& b) {
  std::ostringstream os;
  for (int i = 1; i <= b.rows(); ++i) {
    for (int j = 1; j <= b.cols(); ++j) {
      if (j > 1) os << ' ';
      os << b.at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

ExchangeMatrix exchange_matrix(const Triangulation& t) {
  const int n = t.rank();
  ExchangeMatrix b(t.edge_count(), n);
  for (const auto& tri : t.triangles()) {
    // Sides in counterclockwise traversal order.
    const Label sides[3] = {*t.label_of(tri[0], tri[1]), *t.label_of(tri[1], tri[2]),
                            *t.label_of(tri[2], tri[0])};
    for (int s = 0; s < 3; ++s) {
      const Label before = sides[s];
      const Label after = sides[(s + 1) % 3];
      // Clockwise, `before` comes right after `after`.
      if (t.is_diagonal_label(before)) b.set(after, before, 1);
      if (t.is_diagonal_label(after)) b.set(before, after, -1);
    }
  }
  return b;
}

std::vector<CoefficientPair> initial_coefficients(const Triangulation& t,
                                                  const ExchangeMatrix& b) {
  const int n = t.rank();
  std::vector<CoefficientPair> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    CoefficientPair p{TropicalMonomial::one(n + 1, n + 3), TropicalMonomial::one(n + 1, n + 3)};
    for (int i = n + 1; i <= t.edge_count(); ++i) {
      if (b.at(i, j) == 1) p.plus.multiply_variable(i);
      if (b.at(i, j) == -1) p.minus.multiply_variable(i);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<CoefficientPair> initial_coefficients(const Triangulation& t) {
  return initial_coefficients(t, exchange_matrix(t));
}

ExchangeRelation exchange_relation(const Triangulation& t, Label k) {
  const FlipQuadrilateral q = quadrilateral_of(t, k);
  return {k, q.replacement, q.sides[0], q.sides[1], q.sides[2], q.sides[3]};
}

int crossing_count(const Triangulation& t, const Arc& m) {
  int count = 0;
  for (const Arc& d : t.diagonals()) count += crosses(d, m, t.vertex_count()) ? 1 : 0;
  return count;
}

namespace {

class ExchangeRecursion {
 public:
  explicit ExchangeRecursion(const Triangulation& t) : t_(t) {}

  const LaurentPolynomial& solve(const Arc& m, Vertex a) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    if (const auto label = t_.label_of(m)) {
      return memo_.emplace(m, LaurentPolynomial::variable(t_.edge_count(), *label)).first->second;
    }
    const CrossingQuadrilateral q = crossing_quadrilateral(t_, a, m.other(a));
    // Both sides cross strictly fewer diagonals of T than M does.
    LaurentPolynomial via_l = multiply_by_variable(solve(q.side_l, q.c), q.i1);
    LaurentPolynomial via_l_prime = multiply_by_variable(solve(q.side_l_prime, q.d), q.i1_prime);
    via_l += via_l_prime;
    return memo_.emplace(m, divide_by_variable(via_l, q.i0)).first->second;
  }

 private:
  const Triangulation& t_;
  std::map<Arc, LaurentPolynomial> memo_;
};

}  // namespace

LaurentPolynomial cluster_variable_recursive(const Triangulation& t, const Arc& m, Vertex a) {
  if (!m.fits(t.vertex_count())) throw InputError("arc " + to_string(m) + " outside polygon");
  if (!m.has_endpoint(a)) {
    throw InputError("orientation vertex " + std::to_string(a) + " is not an endpoint of " +
                     to_string(m));
  }
  ExchangeRecursion recursion(t);
  return recursion.solve(m, a);
}

LaurentPolynomial cluster_variable_recursive(const Triangulation& t, const Arc& m) {
  return cluster_variable_recursive(t, m, m.lo());
}

}  // namespace ptolemy
