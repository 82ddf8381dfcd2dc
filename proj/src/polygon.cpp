#include "ptolemy/polygon.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ptolemy/errors.hpp"

namespace ptolemy {

namespace {

// Position of x when walking counterclockwise from `from` (0 at `from`).
int ccw_distance(Vertex from, Vertex x, int vertex_count) {
  return ((x - from) % vertex_count + vertex_count) % vertex_count;
}

bool strictly_inside_ccw(Vertex x, Vertex from, Vertex to, int vertex_count) {
  const int dx = ccw_distance(from, x, vertex_count);
  return dx > 0 && dx < ccw_distance(from, to, vertex_count);
}

void require_vertex(Vertex v, int vertex_count) {
  if (v < 1 || v > vertex_count) {
    throw InputError("vertex " + std::to_string(v) + " outside 1.." +
                     std::to_string(vertex_count));
  }
}

void require_diagonal(Vertex a, Vertex b, int vertex_count) {
  require_vertex(a, vertex_count);
  require_vertex(b, vertex_count);
  if (a == b) throw InputError("degenerate arc at vertex " + std::to_string(a));
  if (Arc(a, b).is_boundary(vertex_count)) {
    throw InputError("arc " + to_string(Arc(a, b)) + " is a boundary edge, not a diagonal");
  }
}

// Distances (ccw from a to the endpoint on the ccw side of M, cw from a to
// the endpoint on the cw side) of a chord crossing M = {a,b}.
std::pair<int, int> crossing_key(const Arc& d, Vertex a, Vertex b, int vertex_count) {
  Vertex p = d.lo();
  Vertex q = d.hi();
  if (!strictly_inside_ccw(p, a, b, vertex_count)) std::swap(p, q);
  return {ccw_distance(a, p, vertex_count), ccw_distance(q, a, vertex_count)};
}

}  // namespace

Arc::Arc(Vertex u, Vertex v) : lo_(std::min(u, v)), hi_(std::max(u, v)) {
  if (u == v) throw InputError("arc endpoints must differ (got " + std::to_string(u) + ")");
  if (lo_ < 1) throw InputError("vertex indices are 1-based (got " + std::to_string(lo_) + ")");
}

Vertex Arc::other(Vertex v) const {
  if (v == lo_) return hi_;
  if (v == hi_) return lo_;
  throw std::logic_error("vertex " + std::to_string(v) + " is not an endpoint of " +
                         to_string(*this));
}

bool Arc::is_boundary(int vertex_count) const {
  return hi_ - lo_ == 1 || (lo_ == 1 && hi_ == vertex_count);
}

std::string to_string(const Arc& arc) {
  return "{" + std::to_string(arc.lo()) + "," + std::to_string(arc.hi()) + "}";
}

bool crosses(const Arc& d1, const Arc& d2, int vertex_count) {
  if (!d1.fits(vertex_count) || !d2.fits(vertex_count)) {
    throw InputError("arc outside polygon with " + std::to_string(vertex_count) + " vertices");
  }
  // Vertex numbering is a circular order cut at one point, and interleaving
  // does not depend on where the circle is cut.
  return (d1.lo() < d2.lo() && d2.lo() < d1.hi() && d1.hi() < d2.hi()) ||
         (d2.lo() < d1.lo() && d1.lo() < d2.hi() && d2.hi() < d1.hi());
}

Triangulation::Triangulation(int n, std::vector<Arc> diagonals) : n_(n) {
  if (n < 1) throw InputError("rank must be positive (got " + std::to_string(n) + ")");
  if (static_cast<int>(diagonals.size()) != n) {
    throw InputError("expected " + std::to_string(n) + " diagonals, got " +
                     std::to_string(diagonals.size()));
  }
  const int count = vertex_count();
  for (const Arc& d : diagonals) {
    require_diagonal(d.lo(), d.hi(), count);
  }
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonals.size(); ++j) {
      if (diagonals[i] == diagonals[j]) {
        throw InputError("duplicate diagonal " + to_string(diagonals[i]));
      }
      if (crosses(diagonals[i], diagonals[j], count)) {
        throw InputError("diagonals " + to_string(diagonals[i]) + " and " +
                         to_string(diagonals[j]) + " cross");
      }
    }
  }

  edges_ = std::move(diagonals);
  edges_.reserve(static_cast<std::size_t>(edge_count()));
  for (Vertex k = 1; k <= count; ++k) edges_.emplace_back(k, k % count + 1);

  label_at_.assign(static_cast<std::size_t>((count + 1) * (count + 1)), 0);
  incident_.assign(static_cast<std::size_t>(count + 1), {});
  for (Label label = 1; label <= edge_count(); ++label) {
    const Arc& e = edges_[static_cast<std::size_t>(label - 1)];
    label_at_[slot(e.lo(), e.hi())] = label;
    label_at_[slot(e.hi(), e.lo())] = label;
    incident_[static_cast<std::size_t>(e.lo())].push_back(label);
    incident_[static_cast<std::size_t>(e.hi())].push_back(label);
  }
  for (auto& labels : incident_) std::sort(labels.begin(), labels.end());

  for (Vertex u = 1; u <= count; ++u) {
    for (Vertex v = u + 1; v <= count; ++v) {
      if (label_at_[slot(u, v)] == 0) continue;
      for (Vertex w = v + 1; w <= count; ++w) {
        if (label_at_[slot(u, w)] != 0 && label_at_[slot(v, w)] != 0) {
          triangles_.push_back({u, v, w});
        }
      }
    }
  }
}

const Arc& Triangulation::arc(Label label) const {
  if (label < 1 || label > edge_count()) {
    throw InputError("label " + std::to_string(label) + " outside 1.." +
                     std::to_string(edge_count()));
  }
  return edges_[static_cast<std::size_t>(label - 1)];
}

std::optional<Label> Triangulation::label_of(Vertex u, Vertex v) const {
  if (u < 1 || v < 1 || u > vertex_count() || v > vertex_count() || u == v) {
    return std::nullopt;
  }
  const Label label = label_at_[slot(u, v)];
  if (label == 0) return std::nullopt;
  return label;
}

std::optional<Label> Triangulation::label_of(const Arc& arc) const {
  return label_of(arc.lo(), arc.hi());
}

std::span<const Label> Triangulation::incident(Vertex v) const {
  require_vertex(v, vertex_count());
  return incident_[static_cast<std::size_t>(v)];
}

std::vector<Arc> Triangulation::sorted_diagonals() const {
  std::vector<Arc> out(edges_.begin(), edges_.begin() + n_);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Triangulation& t) {
  std::ostringstream os;
  for (Label k = 1; k <= t.rank(); ++k) {
    if (k > 1) os << ' ';
    os << 'T' << k << '=' << to_string(t.arc(k));
  }
  return os.str();
}

Triangulation build_triangulation(int n, std::span<const std::pair<Vertex, Vertex>> diagonals,
                                  std::optional<std::span<const Label>> label_order) {
  if (static_cast<int>(diagonals.size()) != n) {
    throw InputError("expected " + std::to_string(n) + " diagonals, got " +
                     std::to_string(diagonals.size()));
  }
  std::vector<std::optional<Arc>> slots(diagonals.size());
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    const auto [u, v] = diagonals[i];
    require_diagonal(u, v, n + 3);
    std::size_t target = i;
    if (label_order) {
      if (label_order->size() != diagonals.size()) {
        throw InputError("label order must have one entry per diagonal");
      }
      const Label label = (*label_order)[i];
      if (label < 1 || label > n || slots[static_cast<std::size_t>(label - 1)]) {
        throw InputError("label order is not a permutation of 1.." + std::to_string(n));
      }
      target = static_cast<std::size_t>(label - 1);
    }
    slots[target] = Arc(u, v);
  }
  std::vector<Arc> arcs;
  arcs.reserve(slots.size());
  for (const auto& s : slots) arcs.push_back(*s);
  return Triangulation(n, std::move(arcs));
}

Triangulation snake_triangulation(int n) {
  if (n < 1) throw InputError("rank must be positive (got " + std::to_string(n) + ")");
  const int count = n + 3;
  Vertex low = 2;
  Vertex high = 4;
  std::vector<Arc> arcs;
  arcs.emplace_back(low, high);
  for (int step = 1; step < n; ++step) {
    if (step % 2 == 1) {
      low = low == 1 ? count : low - 1;
    } else {
      high = high + 1;
    }
    arcs.emplace_back(low, high);
  }
  return Triangulation(n, std::move(arcs));
}

FlipQuadrilateral quadrilateral_of(const Triangulation& t, Label k) {
  if (!t.is_diagonal_label(k)) {
    throw InputError("label " + std::to_string(k) + " is not a diagonal of the triangulation");
  }
  const Arc& diag = t.arc(k);
  std::vector<Vertex> apexes;
  for (const auto& tri : t.triangles()) {
    const int shared = static_cast<int>(diag.has_endpoint(tri[0])) +
                       static_cast<int>(diag.has_endpoint(tri[1])) +
                       static_cast<int>(diag.has_endpoint(tri[2]));
    if (shared != 2) continue;
    for (Vertex v : tri) {
      if (!diag.has_endpoint(v)) apexes.push_back(v);
    }
  }
  if (apexes.size() != 2) throw std::logic_error("diagonal not bounded by two triangles");

  FlipQuadrilateral q{k, Arc(apexes[0], apexes[1]), {diag.lo(), diag.hi(), apexes[0], apexes[1]},
                      {}};
  std::sort(q.corners.begin(), q.corners.end());
  for (std::size_t s = 0; s < 4; ++s) {
    q.sides[s] = *t.label_of(q.corners[s], q.corners[(s + 1) % 4]);
  }
  return q;
}

Triangulation flip(const Triangulation& t, Label k) {
  const FlipQuadrilateral q = quadrilateral_of(t, k);
  std::vector<Arc> arcs(t.diagonals().begin(), t.diagonals().end());
  arcs[static_cast<std::size_t>(k - 1)] = q.replacement;
  return Triangulation(t.rank(), std::move(arcs));
}

CrossingOrder closer_to_a(const Arc& d1, const Arc& d2, Vertex a, Vertex b, int vertex_count) {
  require_diagonal(a, b, vertex_count);
  const Arc m(a, b);
  if (d1 == d2) throw InputError("closer_to_a needs two distinct chords");
  if (!crosses(d1, m, vertex_count) || !crosses(d2, m, vertex_count)) {
    throw InputError("closer_to_a: both chords must cross " + to_string(m));
  }
  if (crosses(d1, d2, vertex_count)) {
    throw InputError("closer_to_a: chords " + to_string(d1) + " and " + to_string(d2) + " cross");
  }
  const auto [p1, q1] = crossing_key(d1, a, b, vertex_count);
  const auto [p2, q2] = crossing_key(d2, a, b, vertex_count);
  return (p1 <= p2 && q1 <= q2) ? CrossingOrder::before : CrossingOrder::after;
}

std::vector<Label> crossing_diagonals_ordered(const Triangulation& t, Vertex a, Vertex b) {
  const int count = t.vertex_count();
  require_diagonal(a, b, count);
  const Arc m(a, b);
  std::vector<Label> out;
  for (Label k = 1; k <= t.rank(); ++k) {
    if (crosses(t.arc(k), m, count)) out.push_back(k);
  }
  std::sort(out.begin(), out.end(), [&](Label x, Label y) {
    return x != y && closer_to_a(t.arc(x), t.arc(y), a, b, count) == CrossingOrder::before;
  });
  return out;
}

CrossingQuadrilateral crossing_quadrilateral(const Triangulation& t, Vertex a, Vertex b) {
  const std::vector<Label> crossing = crossing_diagonals_ordered(t, a, b);
  if (crossing.empty()) {
    throw InputError("arc " + to_string(Arc(a, b)) + " belongs to the triangulation");
  }
  const Label i0 = crossing.front();
  const Arc& nearest = t.arc(i0);
  Vertex c = nearest.lo();
  if (!strictly_inside_ccw(c, a, b, t.vertex_count())) c = nearest.hi();
  const Vertex d = nearest.other(c);
  const auto i1 = t.label_of(a, d);
  const auto i1_prime = t.label_of(a, c);
  if (!i1 || !i1_prime) throw std::logic_error("nearest crossing diagonal has no apex at a");
  return {a, b, c, d, i0, *i1, *i1_prime, Arc(c, b), Arc(d, b)};
}

Triangulation canonical(const Triangulation& t) {
  return Triangulation(t.rank(), t.sorted_diagonals());
}

std::vector<Triangulation> all_triangulations(int n) {
  return flip_graph(n).nodes;
}

FlipGraph flip_graph(int n) {
  if (n < 1) throw InputError("rank must be positive (got " + std::to_string(n) + ")");
  if (n > kMaxEnumerationRank) {
    throw ResourceError("exhaustive enumeration limited to n <= " +
                        std::to_string(kMaxEnumerationRank));
  }
  std::set<std::vector<Arc>> seen;
  std::deque<Triangulation> queue;
  const Triangulation start = canonical(snake_triangulation(n));
  seen.insert(start.sorted_diagonals());
  queue.push_back(start);
  while (!queue.empty()) {
    const Triangulation current = std::move(queue.front());
    queue.pop_front();
    for (Label k = 1; k <= n; ++k) {
      Triangulation next = canonical(flip(current, k));
      if (seen.insert(next.sorted_diagonals()).second) queue.push_back(std::move(next));
    }
  }

  FlipGraph graph;
  std::map<std::vector<Arc>, std::size_t> index;
  for (const auto& key : seen) {
    index.emplace(key, graph.nodes.size());
    graph.nodes.emplace_back(n, key);
  }
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    for (Label k = 1; k <= n; ++k) {
      const std::size_t j = index.at(flip(graph.nodes[i], k).sorted_diagonals());
      if (i < j) graph.edges.emplace_back(i, j);
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  return graph;
}

}  // namespace ptolemy
