#include "ptolemy/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "ptolemy/errors.hpp"
#include "ptolemy/expansion.hpp"
#include "ptolemy/mutation.hpp"
#include "ptolemy/polygon.hpp"
#include "ptolemy/tpath.hpp"

namespace ptolemy {

namespace {

enum Check : std::size_t {
  kCount,
  kFlipGraph,
  kOracle,
  kOrientation,
  kOracleOrientation,
  kPositivity,
  kDistinctWeights,
  kDenominators,
  kPathValidity,
  kBruteForce,
  kPartitions,
  kBijections,
  kTrivialCoefficients,
  kExchangeMatrix,
  kExchangeRelations,
  kNumChecks,
};

constexpr const char* kCheckNames[kNumChecks] = {
    "triangulation count",
    "flip graph",
    "expansion = exchange recursion",
    "orientation independence",
    "recursion orientation independence",
    "positivity",
    "distinct path weights",
    "denominator vector",
    "path validity",
    "enumerator = brute force",
    "partitions",
    "f/g bijections",
    "trivial coefficients",
    "exchange matrix",
    "exchange relations",
};

constexpr std::size_t kMaxExamples = 5;
constexpr int kExchangeRelationMaxRank = 3;

class Tallies {
 public:
  Tallies() {
    for (std::size_t i = 0; i < kNumChecks; ++i) checks_[i].name = kCheckNames[i];
  }

  template <typename Describe>
  void record(Check c, bool ok, Describe&& describe) {
    CheckTally& tally = checks_[c];
    ++tally.instances;
    if (ok) return;
    ++tally.failures;
    if (tally.examples.size() < kMaxExamples) tally.examples.push_back(describe());
  }

  void skip(Check c) { checks_[c].skipped = true; }

  void merge(const Tallies& other) {
    for (std::size_t i = 0; i < kNumChecks; ++i) {
      CheckTally& mine = checks_[i];
      const CheckTally& theirs = other.checks_[i];
      mine.instances += theirs.instances;
      mine.failures += theirs.failures;
      for (const auto& e : theirs.examples) {
        if (mine.examples.size() < kMaxExamples) mine.examples.push_back(e);
      }
    }
  }

  std::vector<CheckTally> take() && {
    std::vector<CheckTally> out;
    for (std::size_t i = 0; i < kNumChecks; ++i) {
      if (checks_[i].instances == 0 && !checks_[i].skipped) continue;
      out.push_back(std::move(checks_[i]));
    }
    return out;
  }

 private:
  CheckTally checks_[kNumChecks];
};

std::vector<Arc> all_diagonals(int vertex_count) {
  std::vector<Arc> out;
  for (Vertex u = 1; u <= vertex_count; ++u) {
    for (Vertex v = u + 1; v <= vertex_count; ++v) {
      Arc arc(u, v);
      if (!arc.is_boundary(vertex_count)) out.push_back(arc);
    }
  }
  return out;
}

std::string where(const Triangulation& t, const Arc& m, Vertex a) {
  return "[" + to_string(t) + "] M=" + to_string(m) + " from " + std::to_string(a);
}

std::string first_failure(const CheckReport& r) {
  return r.failures.empty() ? std::string("failed") : r.failures.front();
}

void check_exchange_matrix(const Triangulation& t, Tallies& tallies) {
  const ExchangeMatrix b = exchange_matrix(t);
  const int n = t.rank();
  std::string problem;
  for (int i = 1; i <= n && problem.empty(); ++i) {
    for (int j = 1; j <= n; ++j) {
      if (b.at(i, j) != -b.at(j, i)) {
        problem = "top block not skew-symmetric at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")";
        break;
      }
    }
  }
  for (int j = 1; j <= n && problem.empty(); ++j) {
    int nonzero = 0;
    for (int i = 1; i <= b.rows(); ++i) nonzero += b.at(i, j) != 0 ? 1 : 0;
    if (nonzero < 2 || nonzero > 4) problem = "column " + std::to_string(j) + " has " +
                                              std::to_string(nonzero) + " nonzero entries";
  }
  // Nonzero entries only for pairs sharing a triangle.
  for (int i = 1; i <= b.rows() && problem.empty(); ++i) {
    for (int j = 1; j <= n; ++j) {
      if (b.at(i, j) == 0) continue;
      const Arc& x = t.arc(i);
      const Arc& y = t.arc(j);
      const bool share = std::any_of(t.triangles().begin(), t.triangles().end(), [&](auto& tri) {
        auto on = [&](const Arc& e) {
          return std::count(tri.begin(), tri.end(), e.lo()) + std::count(tri.begin(), tri.end(), e.hi()) == 2;
        };
        return on(x) && on(y);
      });
      if (!share) {
        problem = "b(" + std::to_string(i) + "," + std::to_string(j) + ") set without a triangle";
        break;
      }
    }
  }
  tallies.record(kExchangeMatrix, problem.empty(), [&] { return "[" + to_string(t) + "] " + problem; });
}

void check_exchange_relations(const Triangulation& t, const std::vector<Triangulation>& seeds,
                              Tallies& tallies) {
  for (Label k = 1; k <= t.rank(); ++k) {
    const ExchangeRelation rel = exchange_relation(t, k);
    for (const Triangulation& s : seeds) {
      const LaurentPolynomial lhs =
          cluster_variable(s, t.arc(k)) * cluster_variable(s, rel.replacement);
      const LaurentPolynomial rhs =
          cluster_variable(s, t.arc(rel.a)) * cluster_variable(s, t.arc(rel.c)) +
          cluster_variable(s, t.arc(rel.b)) * cluster_variable(s, t.arc(rel.d));
      tallies.record(kExchangeRelations, lhs == rhs, [&] {
        return "flip T" + std::to_string(k) + " of [" + to_string(t) + "] in seed [" +
               to_string(s) + "]";
      });
    }
  }
}

void check_trivial(const Triangulation& t, const Arc& m, Vertex a, const LaurentPolynomial& full,
                   Tallies& tallies) {
  const LaurentPolynomial trivial = expand_trivial_coefficients(t, m, a);
  std::vector<Rational> point(static_cast<std::size_t>(t.edge_count()), Rational(1));
  for (Label k = 1; k <= t.rank(); ++k) point[static_cast<std::size_t>(k - 1)] = Rational(k + 2, k + 1);
  bool ok = evaluate(full, point) == evaluate(trivial, point);
  for (const auto& [e, c] : trivial.terms()) {
    for (Label l = t.rank() + 1; l <= t.edge_count(); ++l) {
      ok = ok && e[static_cast<std::size_t>(l - 1)] == 0;
    }
  }
  tallies.record(kTrivialCoefficients, ok, [&] { return where(t, m, a); });
}

void sweep(const Triangulation& t, const std::vector<Arc>& diagonals,
           const std::vector<Triangulation>& seeds, VerifyLevel level, Tallies& tallies) {
  const bool full = level == VerifyLevel::full;
  const int n = t.rank();

  for (const Arc& m : diagonals) {
    const bool in_t = t.contains(m);
    LaurentPolynomial by_orientation[2] = {LaurentPolynomial(0), LaurentPolynomial(0)};
    LaurentPolynomial oracle_by_orientation[2] = {LaurentPolynomial(0), LaurentPolynomial(0)};
    for (int side = 0; side < 2; ++side) {
      const Vertex a = side == 0 ? m.lo() : m.hi();
      const Vertex b = m.other(a);
      const std::vector<TPath> paths = enumerate_t_paths(t, a, b);
      LaurentPolynomial x = expand(t, m, a);
      LaurentPolynomial oracle = cluster_variable_recursive(t, m, a);

      tallies.record(kOracle, x == oracle, [&] { return where(t, m, a); });
      tallies.record(kPositivity, check_positivity(x), [&] { return where(t, m, a); });
      const CheckReport distinct = check_distinct_weights(t, paths);
      tallies.record(kDistinctWeights, distinct.passed,
                     [&] { return where(t, m, a) + ": " + first_failure(distinct); });

      if (full) {
        bool all_valid = true;
        for (const TPath& p : paths) all_valid = all_valid && is_valid_t_path(t, a, b, p);
        tallies.record(kPathValidity, all_valid, [&] { return where(t, m, a); });
        if (n <= kMaxBruteForceRank) {
          tallies.record(kBruteForce, paths == brute_force_t_paths(t, a, b),
                         [&] { return where(t, m, a); });
        } else {
          tallies.skip(kBruteForce);
        }
        if (!in_t) {
          const CheckReport parts = check_partitions(t, a, b);
          tallies.record(kPartitions, parts.passed,
                         [&] { return where(t, m, a) + ": " + first_failure(parts); });
          const CheckReport fg = check_bijections_fg(t, a, b);
          tallies.record(kBijections, fg.passed,
                         [&] { return where(t, m, a) + ": " + first_failure(fg); });
        }
        check_trivial(t, m, a, x, tallies);
      }
      by_orientation[side] = std::move(x);
      oracle_by_orientation[side] = std::move(oracle);
    }
    tallies.record(kOrientation, by_orientation[0] == by_orientation[1],
                   [&] { return where(t, m, m.lo()); });
    tallies.record(kOracleOrientation, oracle_by_orientation[0] == oracle_by_orientation[1],
                   [&] { return where(t, m, m.lo()); });
    const ExponentVector denominators = denominator_vector(by_orientation[0]);
    tallies.record(kDenominators, denominators == crossing_indicator(t, m),
                   [&] { return where(t, m, m.lo()); });
  }

  if (full) {
    check_exchange_matrix(t, tallies);
    if (n <= kExchangeRelationMaxRank) {
      check_exchange_relations(t, seeds, tallies);
    } else {
      tallies.skip(kExchangeRelations);
    }
  }
}

}  // namespace

std::size_t catalan(int k) {
  std::size_t c = 1;
  for (int i = 0; i < k; ++i) {
    c = c * 2 * static_cast<std::size_t>(2 * i + 1) / static_cast<std::size_t>(i + 2);
  }
  return c;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckTally& c) { return c.failures == 0; });
}

const CheckTally* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerifyReport run_verification(int n, VerifyLevel level, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  const FlipGraph graph = flip_graph(n);  // throws on n outside 1..kMaxEnumerationRank
  const std::vector<Triangulation>& all = graph.nodes;
  const std::vector<Arc> diagonals = all_diagonals(n + 3);

  Tallies total;
  const std::size_t expected = catalan(n + 1);
  total.record(kCount, all.size() == expected, [&] {
    return std::to_string(all.size()) + " triangulations, expected " + std::to_string(expected);
  });
  if (level == VerifyLevel::full) {
    std::vector<std::size_t> degree(all.size(), 0);
    for (const auto& [i, j] : graph.edges) {
      ++degree[i];
      ++degree[j];
    }
    const bool regular = std::all_of(degree.begin(), degree.end(),
                                     [&](std::size_t d) { return d == static_cast<std::size_t>(n); });
    total.record(kFlipGraph, regular && graph.edges.size() * 2 == all.size() * static_cast<std::size_t>(n),
                 [&] { return std::to_string(graph.edges.size()) + " flip edges"; });
  }

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(all.size())));
  std::vector<Tallies> partial(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned id) {
    for (std::size_t i = next++; i < all.size(); i = next++) {
      sweep(all[i], diagonals, all, level, partial[id]);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
  }
  for (const Tallies& p : partial) total.merge(p);

  VerifyReport report;
  report.n = n;
  report.level = level;
  report.triangulations = all.size();
  report.diagonals = diagonals.size();
  report.checks = std::move(total).take();
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream os;
  os << "verify n=" << report.n << " level=" << (report.level == VerifyLevel::full ? "full" : "quick")
     << ": " << report.triangulations << " triangulations x " << report.diagonals
     << " diagonals\n";
  os << std::left << std::setw(38) << "check" << std::right << std::setw(10) << "instances"
     << std::setw(10) << "failures" << "  status\n";
  for (const CheckTally& c : report.checks) {
    os << std::left << std::setw(38) << c.name << std::right << std::setw(10) << c.instances
       << std::setw(10) << c.failures << "  ";
    if (c.instances == 0 && c.skipped) {
      os << "skipped\n";
    } else {
      os << (c.failures == 0 ? "pass" : "FAIL") << '\n';
    }
    for (const auto& e : c.examples) os << "    " << e << '\n';
  }
  os << "result: " << (report.passed() ? "PASS" : "FAIL") << " (" << std::fixed
     << std::setprecision(2) << report.seconds << " s)\n";
  return os.str();
}

}  // namespace ptolemy
