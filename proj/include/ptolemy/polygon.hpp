#pragma once

// Combinatorial model of a convex (n+3)-gon with vertices 1..N numbered
// counterclockwise. Everything here is decided by circular order alone; no
// coordinates are ever computed.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ptolemy {

using Vertex = int;
// Edge label of a triangulation: 1..n are diagonals, n+1..2n+3 boundary edges.
using Label = int;

// Unordered pair of distinct vertices, stored with lo() < hi().
class Arc {
 public:
  Arc(Vertex u, Vertex v);

  Vertex lo() const { return lo_; }
  Vertex hi() const { return hi_; }

  bool has_endpoint(Vertex v) const { return v == lo_ || v == hi_; }
  // Endpoint opposite to v; v must be an endpoint.
  Vertex other(Vertex v) const;
  // Circularly adjacent endpoints in an N-gon.
  bool is_boundary(int vertex_count) const;
  bool fits(int vertex_count) const { return hi_ <= vertex_count; }

  friend auto operator<=>(const Arc&, const Arc&) = default;

 private:
  Vertex lo_;
  Vertex hi_;
};

std::string to_string(const Arc& arc);

// True iff the endpoint pairs strictly interleave around the circle.
// Arcs sharing an endpoint, and boundary edges, never cross.
bool crosses(const Arc& d1, const Arc& d2, int vertex_count);

class Triangulation {
 public:
  // `diagonals[i]` receives label i+1. Validates count, range, distinctness
  // and pairwise non-crossing; n non-crossing diagonals are automatically a
  // maximal set.
  Triangulation(int n, std::vector<Arc> diagonals);

  int rank() const { return n_; }
  int vertex_count() const { return n_ + 3; }
  int edge_count() const { return 2 * n_ + 3; }

  const Arc& arc(Label label) const;
  std::optional<Label> label_of(const Arc& arc) const;
  std::optional<Label> label_of(Vertex u, Vertex v) const;
  bool contains(const Arc& arc) const { return label_of(arc).has_value(); }
  bool is_diagonal_label(Label label) const { return label >= 1 && label <= n_; }
  bool is_boundary_label(Label label) const {
    return label > n_ && label <= edge_count();
  }

  // Labels of all edges of T incident to v, ascending.
  std::span<const Label> incident(Vertex v) const;
  // Triangles as vertex triples in ascending (= counterclockwise) order.
  const std::vector<std::array<Vertex, 3>>& triangles() const { return triangles_; }

  std::span<const Arc> edges() const { return edges_; }
  std::span<const Arc> diagonals() const { return {edges_.data(), static_cast<std::size_t>(n_)}; }
  std::vector<Arc> sorted_diagonals() const;

  // Equality of labeled triangulations (same arc under every label).
  friend bool operator==(const Triangulation& x, const Triangulation& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

 private:
  std::size_t slot(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_ + 4) +
           static_cast<std::size_t>(v);
  }

  int n_;
  std::vector<Arc> edges_;            // index label-1
  std::vector<Label> label_at_;       // (N+1) x (N+1), 0 when absent
  std::vector<std::vector<Label>> incident_;
  std::vector<std::array<Vertex, 3>> triangles_;
};

std::string to_string(const Triangulation& t);

// Diagonal labels follow input order unless `label_order` is given, in
// which case the i-th input diagonal receives label label_order[i].
Triangulation build_triangulation(int n, std::span<const std::pair<Vertex, Vertex>> diagonals,
                                  std::optional<std::span<const Label>> label_order = std::nullopt);

// Zigzag triangulation: T_1 = {2,4}, then the diagonals alternately move
// their low end clockwise and their high end counterclockwise.
Triangulation snake_triangulation(int n);

// The quadrilateral formed by the two triangles on either side of T_k.
// corners are counterclockwise; `sides[s]` joins corners[s] and
// corners[s+1 mod 4], so (sides[0], sides[2]) and (sides[1], sides[3])
// are the two pairs of opposite sides.
struct FlipQuadrilateral {
  Label k;
  Arc replacement;
  std::array<Vertex, 4> corners;
  std::array<Label, 4> sides;
};

FlipQuadrilateral quadrilateral_of(const Triangulation& t, Label k);
Triangulation flip(const Triangulation& t, Label k);

// Data of the quadrilateral whose diagonals are M = {a,b} and the crossing
// diagonal T_{i0} nearest to a. The triangle of T on T_{i0} with apex a has
// sides T_{i1} = {a,d} and T_{i1'} = {a,c}; L = {c,b} is opposite T_{i1}
// and L' = {d,b} is opposite T_{i1'}. c is the endpoint of T_{i0} reached
// first when walking counterclockwise from a.
struct CrossingQuadrilateral {
  Vertex a;
  Vertex b;
  Vertex c;
  Vertex d;
  Label i0;
  Label i1;
  Label i1_prime;
  Arc side_l;
  Arc side_l_prime;
};

// Requires M = {a,b} to be a diagonal not in T.
CrossingQuadrilateral crossing_quadrilateral(const Triangulation& t, Vertex a, Vertex b);

enum class CrossingOrder { before, after };

// Compares where two non-crossing chords D1 != D2, both crossing M, meet M,
// with M oriented from `a`. `before` means D1 meets M nearer to a.
CrossingOrder closer_to_a(const Arc& d1, const Arc& d2, Vertex a, Vertex b, int vertex_count);

// Diagonal labels of T crossing M = {a,b}, nearest-to-a first. Empty iff M
// belongs to T.
std::vector<Label> crossing_diagonals_ordered(const Triangulation& t, Vertex a, Vertex b);

inline constexpr int kMaxEnumerationRank = 8;

// All triangulations of the (n+3)-gon, canonically labeled (diagonals in
// sorted arc order), sorted by diagonal list.
std::vector<Triangulation> all_triangulations(int n);

// Canonical relabeling: diagonals sorted ascending.
Triangulation canonical(const Triangulation& t);

struct FlipGraph {
  std::vector<Triangulation> nodes;                   // canonical, sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
};

FlipGraph flip_graph(int n);

}  // namespace ptolemy
