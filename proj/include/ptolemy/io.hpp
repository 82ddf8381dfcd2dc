#pragma once

// Problem specifications and the versioned JSON documents produced by the
// command-line tool.
//
// Expansion document (schema "ptolemy.expansion", version 1):
//   {
//     "schema": "ptolemy.expansion", "version": 1,
//     "labeling": "ccw-v1",          // vertices 1..N ccw, boundary {k,k+1} -> n+k
//     "n": 5, "diagonals": [[2,4], ...], "target": [3,7], "orient": 3,
//     "trivial_coefficients": false,
//     "polynomial": {"num_variables": 13,
//                    "terms": [{"coefficient": "1", "exponents": [...]}, ...]}
//   }
// Coefficients are decimal strings so arbitrary precision survives.
//
// Spec file: {"n": 5, "diagonals": [[2,4], ...], "labels": [1,2,...],
//             "target": [3,7], "orient": 3, "trivial_coefficients": false}
// Everything but "n" is optional; no diagonals means the snake triangulation.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ptolemy/algebra.hpp"
#include "ptolemy/polygon.hpp"
#include "ptolemy/tpath.hpp"

namespace ptolemy {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kLabelingConvention = "ccw-v1";

using VertexPair = std::pair<Vertex, Vertex>;

struct ProblemSpec {
  int n = 0;
  std::vector<VertexPair> diagonals;  // empty: snake triangulation
  std::vector<Label> label_order;     // empty: input order
  std::optional<VertexPair> target;
  std::optional<Vertex> orient;
  bool trivial_coefficients = false;
};

// "3-7"
VertexPair parse_vertex_pair(std::string_view text);
// "2-4,4-6,2-6"
std::vector<VertexPair> parse_vertex_pairs(std::string_view text);
std::string format_vertex_pairs(std::span<const Arc> arcs);

ProblemSpec problem_spec_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const ProblemSpec& spec);

Triangulation triangulation_of(const ProblemSpec& spec);
// Target arc and orientation vertex; throws InputError if no target.
std::pair<Arc, Vertex> oriented_target(const ProblemSpec& spec);

nlohmann::json polynomial_to_json(const LaurentPolynomial& f);
LaurentPolynomial polynomial_from_json(const nlohmann::json& doc);

nlohmann::json expansion_document(const ProblemSpec& spec, const Triangulation& t,
                                  const Arc& target, Vertex orient, const LaurentPolynomial& f);
// Validates schema name and version before reading the polynomial.
LaurentPolynomial polynomial_from_expansion_document(const nlohmann::json& doc);

nlohmann::json paths_document(const Triangulation& t, const Arc& target, Vertex orient,
                              std::span<const TPath> paths);

}  // namespace ptolemy
