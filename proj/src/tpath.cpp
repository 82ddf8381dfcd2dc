#include "ptolemy/tpath.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "ptolemy/errors.hpp"

namespace ptolemy {

namespace {

constexpr int kMaxSearchEdges = 64;

void require_endpoints(const Triangulation& t, Vertex a, Vertex b, bool allow_boundary) {
  const int count = t.vertex_count();
  if (a < 1 || a > count || b < 1 || b > count) {
    throw InputError("path endpoints must be vertices 1.." + std::to_string(count));
  }
  if (a == b) throw InputError("path endpoints must differ");
  if (!allow_boundary && Arc(a, b).is_boundary(count)) {
    throw InputError("endpoints " + std::to_string(a) + " and " + std::to_string(b) +
                     " are adjacent; M must be a diagonal");
  }
}

// Position of each label in the nearest-to-a order of crossing diagonals,
// or -1 for edges that do not cross M.
std::vector<int> crossing_ranks(const Triangulation& t, Vertex a, Vertex b) {
  std::vector<int> rank(static_cast<std::size_t>(t.edge_count() + 1), -1);
  if (Arc(a, b).is_boundary(t.vertex_count())) return rank;
  const std::vector<Label> order = crossing_diagonals_ordered(t, a, b);
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  }
  return rank;
}

class PathSearch {
 public:
  PathSearch(const Triangulation& t, Vertex b, std::vector<int> ranks, bool prune)
      : t_(t), b_(b), ranks_(std::move(ranks)), prune_(prune) {}

  std::vector<TPath> run(Vertex a) {
    current_.vertices.assign(1, a);
    current_.labels.clear();
    extend(a, 0, -1);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void extend(Vertex v, std::uint64_t used, int last_rank) {
    const int length = current_.length();
    if (length % 2 == 1 && v == b_) found_.push_back(current_);
    const bool even_step = (length + 1) % 2 == 0;
    for (Label label : t_.incident(v)) {
      const std::uint64_t bit = std::uint64_t{1} << (label - 1);
      if (used & bit) continue;
      int next_rank = last_rank;
      if (prune_) {
        const int r = ranks_[static_cast<std::size_t>(label)];
        if (even_step && r < 0) continue;
        if (r >= 0) {
          if (r <= last_rank) continue;
          next_rank = r;
        }
      }
      const Vertex w = t_.arc(label).other(v);
      current_.vertices.push_back(w);
      current_.labels.push_back(label);
      extend(w, used | bit, next_rank);
      current_.vertices.pop_back();
      current_.labels.pop_back();
    }
  }

  const Triangulation& t_;
  Vertex b_;
  std::vector<int> ranks_;
  bool prune_;
  TPath current_;
  std::vector<TPath> found_;
};

std::vector<TPath> search(const Triangulation& t, Vertex a, Vertex b, bool allow_boundary) {
  require_endpoints(t, a, b, allow_boundary);
  if (t.edge_count() > kMaxSearchEdges) {
    throw ResourceError("T-path search supports at most " + std::to_string(kMaxSearchEdges) +
                        " edges");
  }
  return PathSearch(t, b, crossing_ranks(t, a, b), /*prune=*/true).run(a);
}

}  // namespace

std::string to_string(const TPath& path) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    if (i > 0) os << ',';
    os << path.vertices[i];
  }
  os << " | ";
  for (std::size_t i = 0; i < path.labels.size(); ++i) {
    if (i > 0) os << ',';
    os << path.labels[i];
  }
  os << ')';
  return os.str();
}

int condition_number(TPathCondition c) { return static_cast<int>(c); }

std::string_view condition_name(TPathCondition c) {
  switch (c) {
    case TPathCondition::endpoints: return "endpoints";
    case TPathCondition::incidence: return "incidence";
    case TPathCondition::distinct_edges: return "distinct edges";
    case TPathCondition::odd_length: return "odd length";
    case TPathCondition::even_edges_cross: return "even edges cross M";
    case TPathCondition::crossing_order: return "crossing order";
  }
  return "unknown";
}

TPathCheck check_t_path(const Triangulation& t, Vertex a, Vertex b, const TPath& candidate) {
  require_endpoints(t, a, b, /*allow_boundary=*/false);
  for (Label label : candidate.labels) {
    if (label < 1 || label > t.edge_count()) {
      throw InputError("edge label " + std::to_string(label) + " outside 1.." +
                       std::to_string(t.edge_count()));
    }
  }
  const auto& vs = candidate.vertices;
  const auto& ls = candidate.labels;
  const int count = t.vertex_count();

  const bool in_range =
      std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return v >= 1 && v <= count; });
  if (vs.size() != ls.size() + 1 || !in_range || vs.front() != a || vs.back() != b) {
    return {TPathCondition::endpoints};
  }
  for (std::size_t k = 0; k < ls.size(); ++k) {
    const Arc& e = t.arc(ls[k]);
    if (vs[k] == vs[k + 1] || !e.has_endpoint(vs[k]) || !e.has_endpoint(vs[k + 1])) {
      return {TPathCondition::incidence};
    }
  }
  std::vector<Label> sorted = ls;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return {TPathCondition::distinct_edges};
  }
  if (ls.size() % 2 == 0) return {TPathCondition::odd_length};

  const Arc m(a, b);
  // Position k (0-based) holds the edge with 1-based index k + 1.
  for (std::size_t k = 1; k < ls.size(); k += 2) {
    if (!crosses(t.arc(ls[k]), m, count)) return {TPathCondition::even_edges_cross};
  }
  std::vector<Label> crossing;
  for (Label label : ls) {
    if (crosses(t.arc(label), m, count)) crossing.push_back(label);
  }
  for (std::size_t j = 0; j < crossing.size(); ++j) {
    for (std::size_t k = j + 1; k < crossing.size(); ++k) {
      if (closer_to_a(t.arc(crossing[j]), t.arc(crossing[k]), a, b, count) !=
          CrossingOrder::before) {
        return {TPathCondition::crossing_order};
      }
    }
  }
  return {};
}

bool is_valid_t_path(const Triangulation& t, Vertex a, Vertex b, const TPath& candidate) {
  return check_t_path(t, a, b, candidate).valid();
}

std::vector<TPath> enumerate_t_paths(const Triangulation& t, Vertex a, Vertex b) {
  return search(t, a, b, /*allow_boundary=*/false);
}

std::vector<TPath> enumerate_t_paths_for_arc(const Triangulation& t, Vertex a, Vertex b) {
  return search(t, a, b, /*allow_boundary=*/true);
}

std::vector<TPath> brute_force_t_paths(const Triangulation& t, Vertex a, Vertex b) {
  if (t.rank() > kMaxBruteForceRank) {
    throw ResourceError("brute-force T-path enumeration limited to n <= " +
                        std::to_string(kMaxBruteForceRank));
  }
  require_endpoints(t, a, b, /*allow_boundary=*/false);
  std::vector<TPath> trails = PathSearch(t, b, {}, /*prune=*/false).run(a);
  std::erase_if(trails, [&](const TPath& p) { return !is_valid_t_path(t, a, b, p); });
  return trails;
}

Monomial path_weight(const Triangulation& t, const TPath& path) {
  Monomial m{1, ExponentVector(static_cast<std::size_t>(t.edge_count()), 0)};
  for (std::size_t k = 0; k < path.labels.size(); ++k) {
    m.exponents[static_cast<std::size_t>(path.labels[k] - 1)] += (k % 2 == 0) ? 1 : -1;
  }
  return m;
}

}  // namespace ptolemy
