#pragma once

// Laurent expansion of the cluster variable x_M in the cluster of a
// triangulation T as a sum of T-path weights, plus checkable forms of the
// combinatorial facts the expansion rests on.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ptolemy/algebra.hpp"
#include "ptolemy/polygon.hpp"
#include "ptolemy/tpath.hpp"

namespace ptolemy {

// x_M as the sum of path weights over all T-paths from `a` to the other
// endpoint of M. M must be a diagonal; if M = T_i the result is x_i.
LaurentPolynomial expand(const Triangulation& t, const Arc& m, Vertex a);

// Any arc of the polygon: boundary edges and arcs of T give their variable.
LaurentPolynomial cluster_variable(const Triangulation& t, const Arc& m);

// Sets every boundary variable x_{n+1}..x_{2n+3} to 1.
LaurentPolynomial specialize_boundary(const Triangulation& t, const LaurentPolynomial& f);
LaurentPolynomial expand_trivial_coefficients(const Triangulation& t, const Arc& m, Vertex a);

// Entry i (0-based) is the largest power of x_{i+1} appearing in a
// denominator, i.e. max(0, -min exponent of x_{i+1}).
ExponentVector denominator_vector(const LaurentPolynomial& f);
ExponentVector denominator_vector(const Triangulation& t, const Arc& m);

// Entry i is 1 iff T_{i+1} crosses M. Boundary entries are always 0.
ExponentVector crossing_indicator(const Triangulation& t, const Arc& m);

// Outcome of a structural check. Records what was examined and the first
// few failures in human-readable form.
struct CheckReport {
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::string summary;

  void fail(std::string message);
  void merge(const CheckReport& other);
  explicit operator bool() const { return passed; }
};

// Every coefficient equals 1.
bool check_positivity(const LaurentPolynomial& f);

// Path weights are pairwise distinct, so the sum has no merged terms.
CheckReport check_distinct_weights(const Triangulation& t, std::span<const TPath> paths);

// Every T-path from a to b starts with T_{i1} or T_{i1'}, and within each
// class either continues with T_{i0} or never uses T_{i0}.
CheckReport check_partitions(const Triangulation& t, Vertex a, Vertex b);

// The maps f (swap a leading T_{i0} for T_{i1}) and g (prepend a,d,c) from
// T-paths c -> b onto the T-paths a -> b starting with T_{i1}, and their
// mirror images from d -> b onto paths starting with T_{i1'}: images are
// valid, land in the right class, are injective, cover the class, and
// scale weights by x_{i1}/x_{i0} (resp. x_{i1'}/x_{i0}). Also checks
// |P(a,b)| = |P(c,b)| + |P(d,b)|.
CheckReport check_bijections_fg(const Triangulation& t, Vertex a, Vertex b);

}  // namespace ptolemy
