#pragma once

// T-paths: walks on the edges of a triangulation T from a to b, of odd
// length, never reusing an edge, whose even-position edges cross M_{a,b},
// and whose edges crossing M_{a,b} meet it in order of increasing distance
// from a.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptolemy/algebra.hpp"
#include "ptolemy/polygon.hpp"

namespace ptolemy {

struct TPath {
  std::vector<Vertex> vertices;  // a_0 .. a_l
  std::vector<Label> labels;     // i_1 .. i_l

  int length() const { return static_cast<int>(labels.size()); }

  // Lexicographic on the label sequence first.
  friend auto operator<=>(const TPath& x, const TPath& y) {
    if (auto c = x.labels <=> y.labels; c != 0) return c;
    return x.vertices <=> y.vertices;
  }
  friend bool operator==(const TPath&, const TPath&) = default;
};

// "(3,2,6,7 | 7,3,11)"
std::string to_string(const TPath& path);

// The defining conditions, numbered in the order they are checked.
enum class TPathCondition {
  endpoints = 1,        // starts at a, ends at b, vertices in range
  incidence = 2,        // each edge joins consecutive vertices
  distinct_edges = 3,   // no edge used twice
  odd_length = 4,
  even_edges_cross = 5, // every even-position edge crosses M
  crossing_order = 6,   // crossing edges progress from a towards b
};

int condition_number(TPathCondition c);
std::string_view condition_name(TPathCondition c);

struct TPathCheck {
  std::optional<TPathCondition> violated;  // lowest-numbered failure
  bool valid() const { return !violated.has_value(); }
  explicit operator bool() const { return valid(); }
};

// Throws InputError for labels outside 1..2n+3 or for adjacent/equal a, b.
TPathCheck check_t_path(const Triangulation& t, Vertex a, Vertex b, const TPath& candidate);
bool is_valid_t_path(const Triangulation& t, Vertex a, Vertex b, const TPath& candidate);

// All T-paths from a to b, sorted by label sequence. a and b must be
// distinct and non-adjacent.
std::vector<TPath> enumerate_t_paths(const Triangulation& t, Vertex a, Vertex b);

// Same, but also accepts a boundary edge {a,b}, whose only path is the edge
// itself. Used when recursing onto polygon sides.
std::vector<TPath> enumerate_t_paths_for_arc(const Triangulation& t, Vertex a, Vertex b);

inline constexpr int kMaxBruteForceRank = 4;

// Unpruned reference: every trail from a of odd length ending at b, filtered
// through check_t_path. Limited to n <= kMaxBruteForceRank.
std::vector<TPath> brute_force_t_paths(const Triangulation& t, Vertex a, Vertex b);

// x(alpha): product of odd-position edge variables over the product of
// even-position ones, coefficient 1, over 2n+3 variables.
Monomial path_weight(const Triangulation& t, const TPath& path);

}  // namespace ptolemy
