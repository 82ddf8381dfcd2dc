#include "ptolemy/expansion.hpp"

#include <algorithm>
#include <set>

#include "ptolemy/errors.hpp"

namespace ptolemy {

namespace {

constexpr std::size_t kMaxRecordedFailures = 8;

Vertex other_endpoint(const Arc& m, Vertex a) {
  if (!m.has_endpoint(a)) {
    throw InputError("orientation vertex " + std::to_string(a) + " is not an endpoint of " +
                     to_string(m));
  }
  return m.other(a);
}

std::vector<int> boundary_indices(const Triangulation& t) {
  std::vector<int> out;
  for (Label label = t.rank() + 1; label <= t.edge_count(); ++label) out.push_back(label);
  return out;
}

Monomial ratio(const Triangulation& t, Label numerator, Label denominator) {
  Monomial m{1, ExponentVector(static_cast<std::size_t>(t.edge_count()), 0)};
  m.exponents[static_cast<std::size_t>(numerator - 1)] += 1;
  m.exponents[static_cast<std::size_t>(denominator - 1)] -= 1;
  return m;
}

bool uses(const TPath& p, Label label) {
  return std::find(p.labels.begin(), p.labels.end(), label) != p.labels.end();
}

// One half of the f/g bijection check: paths start -> b mapped onto the
// paths a -> b whose first edge is `first` = {a, other}.
std::size_t check_bijection_side(const Triangulation& t, Vertex a, Vertex b, Vertex start,
                                 Vertex other, Label first, Label i0,
                                 std::span<const TPath> targets, CheckReport& report) {
  const std::vector<TPath> sources = enumerate_t_paths_for_arc(t, start, b);
  const Monomial scale = ratio(t, first, i0);
  std::set<TPath> images;

  for (const TPath& gamma : sources) {
    ++report.checked;
    TPath image;
    bool via_f = false;
    if (gamma.labels.front() == i0) {
      via_f = true;
      image.vertices = gamma.vertices;
      image.vertices.front() = a;
      image.labels = gamma.labels;
      image.labels.front() = first;
    } else if (!uses(gamma, i0)) {
      image.vertices = {a, other};
      image.vertices.insert(image.vertices.end(), gamma.vertices.begin(), gamma.vertices.end());
      image.labels = {first, i0};
      image.labels.insert(image.labels.end(), gamma.labels.begin(), gamma.labels.end());
    } else {
      report.fail(to_string(gamma) + " uses T" + std::to_string(i0) +
                  " but not as its first edge");
      continue;
    }

    const char* map_name = via_f ? "f" : "g";
    if (const TPathCheck check = check_t_path(t, a, b, image); !check) {
      report.fail(std::string(map_name) + "(" + to_string(gamma) + ") = " + to_string(image) +
                  " violates " + std::string(condition_name(*check.violated)));
      continue;
    }
    const bool in_class = via_f ? !uses(image, i0) : image.labels[1] == i0;
    if (!in_class) {
      report.fail(std::string(map_name) + "(" + to_string(gamma) + ") lands in the wrong class");
    }
    if (path_weight(t, image) != mono_mul(path_weight(t, gamma), scale)) {
      report.fail(std::string(map_name) + "(" + to_string(gamma) + ") breaks the weight relation");
    }
    if (!images.insert(image).second) {
      report.fail(std::string(map_name) + " is not injective at " + to_string(gamma));
    }
  }

  std::set<TPath> expected;
  for (const TPath& alpha : targets) {
    if (alpha.labels.front() == first) expected.insert(alpha);
  }
  if (images != expected) {
    report.fail("images of paths from " + std::to_string(start) + " cover " +
                std::to_string(images.size()) + " paths, class starting with T" +
                std::to_string(first) + " has " + std::to_string(expected.size()));
  }
  return sources.size();
}

}  // namespace

void CheckReport::fail(std::string message) {
  passed = false;
  if (failures.size() < kMaxRecordedFailures) failures.push_back(std::move(message));
}

void CheckReport::merge(const CheckReport& other) {
  passed = passed && other.passed;
  checked += other.checked;
  for (const auto& f : other.failures) {
    if (failures.size() >= kMaxRecordedFailures) break;
    failures.push_back(f);
  }
}

LaurentPolynomial expand(const Triangulation& t, const Arc& m, Vertex a) {
  if (!m.fits(t.vertex_count())) throw InputError("arc " + to_string(m) + " outside polygon");
  if (m.is_boundary(t.vertex_count())) {
    throw InputError("arc " + to_string(m) + " is a boundary edge, not a diagonal");
  }
  const Vertex b = other_endpoint(m, a);
  if (const auto label = t.label_of(m)) return LaurentPolynomial::variable(t.edge_count(), *label);

  LaurentPolynomial sum(t.edge_count());
  for (const TPath& path : enumerate_t_paths(t, a, b)) {
    const Monomial w = path_weight(t, path);
    sum.add_term(w.exponents, w.coefficient);
  }
  return sum;
}

LaurentPolynomial cluster_variable(const Triangulation& t, const Arc& m) {
  if (const auto label = t.label_of(m)) return LaurentPolynomial::variable(t.edge_count(), *label);
  return expand(t, m, m.lo());
}

LaurentPolynomial specialize_boundary(const Triangulation& t, const LaurentPolynomial& f) {
  const std::vector<int> indices = boundary_indices(t);
  return substitute_one(f, indices);
}

LaurentPolynomial expand_trivial_coefficients(const Triangulation& t, const Arc& m, Vertex a) {
  return specialize_boundary(t, expand(t, m, a));
}

ExponentVector denominator_vector(const LaurentPolynomial& f) {
  ExponentVector d(static_cast<std::size_t>(f.num_variables()), 0);
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) d[i] = std::max(d[i], -e[i]);
  }
  return d;
}

ExponentVector denominator_vector(const Triangulation& t, const Arc& m) {
  return denominator_vector(expand(t, m, m.lo()));
}

ExponentVector crossing_indicator(const Triangulation& t, const Arc& m) {
  ExponentVector e(static_cast<std::size_t>(t.edge_count()), 0);
  for (Label k = 1; k <= t.rank(); ++k) {
    e[static_cast<std::size_t>(k - 1)] = crosses(t.arc(k), m, t.vertex_count()) ? 1 : 0;
  }
  return e;
}

bool check_positivity(const LaurentPolynomial& f) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const auto& term) { return term.second == 1; });
}

CheckReport check_distinct_weights(const Triangulation& t, std::span<const TPath> paths) {
  CheckReport report;
  std::set<ExponentVector> seen;
  for (const TPath& p : paths) {
    ++report.checked;
    if (!seen.insert(path_weight(t, p).exponents).second) {
      report.fail("weight of " + to_string(p) + " repeats an earlier path's weight");
    }
  }
  return report;
}

CheckReport check_partitions(const Triangulation& t, Vertex a, Vertex b) {
  const CrossingQuadrilateral q = crossing_quadrilateral(t, a, b);
  CheckReport report;
  std::size_t by_first[2][2] = {{0, 0}, {0, 0}};  // [i1 | i1'][with i0 second | without i0]
  for (const TPath& p : enumerate_t_paths(t, a, b)) {
    ++report.checked;
    const Label first = p.labels.front();
    std::size_t side = 0;
    if (first == q.i1) {
      side = 0;
    } else if (first == q.i1_prime) {
      side = 1;
    } else {
      report.fail(to_string(p) + " starts with T" + std::to_string(first) + ", expected T" +
                  std::to_string(q.i1) + " or T" + std::to_string(q.i1_prime));
      continue;
    }
    if (p.labels.size() > 1 && p.labels[1] == q.i0) {
      ++by_first[side][0];
    } else if (!uses(p, q.i0)) {
      ++by_first[side][1];
    } else {
      report.fail(to_string(p) + " uses T" + std::to_string(q.i0) +
                  " at a position other than second");
    }
  }
  report.summary = "i0=T" + std::to_string(q.i0) + " i1=T" + std::to_string(q.i1) + " [" +
                   std::to_string(by_first[0][0]) + "+" + std::to_string(by_first[0][1]) +
                   "] i1'=T" + std::to_string(q.i1_prime) + " [" +
                   std::to_string(by_first[1][0]) + "+" + std::to_string(by_first[1][1]) + "]";
  return report;
}

CheckReport check_bijections_fg(const Triangulation& t, Vertex a, Vertex b) {
  const CrossingQuadrilateral q = crossing_quadrilateral(t, a, b);
  const std::vector<TPath> targets = enumerate_t_paths(t, a, b);
  CheckReport report;
  const std::size_t from_c =
      check_bijection_side(t, a, b, q.c, q.d, q.i1, q.i0, targets, report);
  const std::size_t from_d =
      check_bijection_side(t, a, b, q.d, q.c, q.i1_prime, q.i0, targets, report);
  if (targets.size() != from_c + from_d) {
    report.fail("|P(a,b)| = " + std::to_string(targets.size()) + " but |P(c,b)| + |P(d,b)| = " +
                std::to_string(from_c) + " + " + std::to_string(from_d));
  }
  report.summary = "|P(a,b)|=" + std::to_string(targets.size()) +
                   " |P(c,b)|=" + std::to_string(from_c) + " |P(d,b)|=" + std::to_string(from_d);
  return report;
}

}  // namespace ptolemy
