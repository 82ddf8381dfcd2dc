#include "ptolemy/cli.hpp"

#include <fstream>
#include <vector>

#include "CLI11.hpp"
#include "ptolemy/errors.hpp"
#include "ptolemy/expansion.hpp"
#include "ptolemy/mutation.hpp"
#include "ptolemy/tpath.hpp"

namespace ptolemy::cli {

using nlohmann::json;

namespace {

json diagonals_json(const Triangulation& t) {
  json out = json::array();
  for (const Arc& a : t.diagonals()) out.push_back({a.lo(), a.hi()});
  return out;
}

std::vector<Label> parse_labels(const std::string& text) {
  std::vector<Label> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("cannot parse label list '" + text + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

ProblemSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("spec file '" + path + "' is not valid JSON: " + e.what());
  }
  return problem_spec_from_json(doc);
}

// Raw flag values shared by all subcommands; merged into a ProblemSpec
// after parsing so that flags override the spec file.
struct Flags {
  int n = 0;
  std::string diagonals;
  std::string labels;
  std::string target;
  Vertex orient = 0;
  bool trivial = false;
  std::string spec_file;
  std::string format = "text";
  std::string level = "quick";
  unsigned jobs = 1;
};

struct Options {
  CLI::Option* n = nullptr;
  CLI::Option* diagonals = nullptr;
  CLI::Option* labels = nullptr;
  CLI::Option* target = nullptr;
  CLI::Option* orient = nullptr;
  CLI::Option* spec_file = nullptr;
};

Options add_problem_options(CLI::App& sub, Flags& f) {
  Options o;
  o.n = sub.add_option("--n", f.n, "Rank n; the polygon has n+3 vertices");
  o.diagonals = sub.add_option("--diagonals", f.diagonals,
                               "Diagonals as a-b,c-d,...; omitted means the snake triangulation");
  o.labels = sub.add_option("--labels", f.labels,
                            "Label assigned to each listed diagonal, e.g. 3,1,2");
  o.target = sub.add_option("--target", f.target, "Target diagonal M as a-b");
  o.orient = sub.add_option("--orient", f.orient, "Endpoint of M used as the start vertex a");
  sub.add_flag("--trivial-coefficients", f.trivial, "Set all boundary variables to 1");
  o.spec_file = sub.add_option("--spec", f.spec_file, "JSON spec file");
  return o;
}

void add_format_option(CLI::App& sub, Flags& f) {
  sub.add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
}

ProblemSpec resolve_spec(const Flags& f, const Options& o) {
  ProblemSpec spec;
  if (o.spec_file->count() > 0) spec = load_spec_file(f.spec_file);
  if (o.n->count() > 0) spec.n = f.n;
  if (o.diagonals->count() > 0) spec.diagonals = parse_vertex_pairs(f.diagonals);
  if (o.labels->count() > 0) spec.label_order = parse_labels(f.labels);
  if (o.target->count() > 0) spec.target = parse_vertex_pair(f.target);
  if (o.orient->count() > 0) spec.orient = f.orient;
  if (f.trivial) spec.trivial_coefficients = true;
  if (spec.n < 1) throw InputError("--n (or \"n\" in the spec file) must be a positive rank");
  return spec;
}

Format format_of(const Flags& f) { return f.format == "structured" ? Format::structured : Format::text; }

}  // namespace

int cmd_expand(const ProblemSpec& spec, Format format, std::ostream& out) {
  const Triangulation t = triangulation_of(spec);
  const auto [m, a] = oriented_target(spec);
  const LaurentPolynomial f = spec.trivial_coefficients ? expand_trivial_coefficients(t, m, a)
                                                        : expand(t, m, a);
  if (format == Format::structured) {
    out << expansion_document(spec, t, m, a, f).dump(2) << '\n';
  } else {
    out << to_string(f) << '\n';
  }
  return kOk;
}

int cmd_paths(const ProblemSpec& spec, Format format, std::ostream& out) {
  const Triangulation t = triangulation_of(spec);
  const auto [m, a] = oriented_target(spec);
  const std::vector<TPath> paths = enumerate_t_paths(t, a, m.other(a));
  if (format == Format::structured) {
    out << paths_document(t, m, a, paths).dump(2) << '\n';
  } else {
    for (const TPath& p : paths) out << to_string(p) << '\n';
  }
  return kOk;
}

int cmd_verify(int n, VerifyLevel level, unsigned jobs, Format format, std::ostream& out) {
  const VerifyReport report = run_verification(n, level, jobs);
  if (format == Format::structured) {
    json checks = json::array();
    for (const CheckTally& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"instances", c.instances},
                        {"failures", c.failures},
                        {"skipped", c.skipped && c.instances == 0},
                        {"examples", c.examples}});
    }
    out << json{{"schema", "ptolemy.verify"},
                {"version", kSchemaVersion},
                {"n", n},
                {"level", level == VerifyLevel::full ? "full" : "quick"},
                {"triangulations", report.triangulations},
                {"diagonals", report.diagonals},
                {"checks", checks},
                {"passed", report.passed()},
                {"seconds", report.seconds}}
               .dump(2)
        << '\n';
  } else {
    out << format_report(report);
  }
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_matrix(const ProblemSpec& spec, Format format, std::ostream& out) {
  const Triangulation t = triangulation_of(spec);
  const ExchangeMatrix b = exchange_matrix(t);
  const std::vector<CoefficientPair> p = initial_coefficients(t, b);
  if (format == Format::structured) {
    json rows = json::array();
    for (int i = 1; i <= b.rows(); ++i) {
      json row = json::array();
      for (int j = 1; j <= b.cols(); ++j) row.push_back(b.at(i, j));
      rows.push_back(row);
    }
    json coefficients = json::array();
    for (const auto& pair : p) {
      coefficients.push_back({{"plus", to_string(pair.plus)}, {"minus", to_string(pair.minus)}});
    }
    out << json{{"schema", "ptolemy.seed"},
                {"version", kSchemaVersion},
                {"labeling", kLabelingConvention},
                {"n", t.rank()},
                {"diagonals", diagonals_json(t)},
                {"matrix", rows},
                {"coefficients", coefficients}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << to_string(b) << '\n';
  for (std::size_t j = 0; j < p.size(); ++j) {
    out << "(p" << j + 1 << "+, p" << j + 1 << "-) = (" << to_string(p[j].plus) << ", "
        << to_string(p[j].minus) << ")\n";
  }
  return kOk;
}

int cmd_triangulations(int n, Format format, std::ostream& out) {
  const std::vector<Triangulation> all = all_triangulations(n);
  if (format == Format::structured) {
    json list = json::array();
    for (const auto& t : all) list.push_back(diagonals_json(t));
    out << json{{"schema", "ptolemy.triangulations"},
                {"version", kSchemaVersion},
                {"n", n},
                {"count", all.size()},
                {"triangulations", list}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& t : all) out << format_vertex_pairs(t.diagonals()) << '\n';
  }
  return kOk;
}

int cmd_graph(int n, Format format, std::ostream& out) {
  const FlipGraph g = flip_graph(n);
  if (format == Format::structured) {
    json nodes = json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      nodes.push_back({{"id", i}, {"diagonals", diagonals_json(g.nodes[i])}});
    }
    json edges = json::array();
    for (const auto& [i, j] : g.edges) edges.push_back({i, j});
    out << json{{"schema", "ptolemy.flip_graph"},
                {"version", kSchemaVersion},
                {"n", n},
                {"nodes", nodes},
                {"edges", edges}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "graph flip_n" << n << " {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << "  t" << i << " [label=\"" << format_vertex_pairs(g.nodes[i].diagonals()) << "\"];\n";
  }
  for (const auto& [i, j] : g.edges) out << "  t" << i << " -- t" << j << ";\n";
  out << "}\n";
  return kOk;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laurent expansions of cluster variables from triangulations of a polygon"};
  app.require_subcommand(1);
  Flags f;

  auto* expand_cmd = app.add_subcommand("expand", "Expand x_M in the cluster of a triangulation");
  const Options expand_opts = add_problem_options(*expand_cmd, f);
  add_format_option(*expand_cmd, f);

  auto* paths_cmd = app.add_subcommand("paths", "List the T-paths from a to b");
  const Options paths_opts = add_problem_options(*paths_cmd, f);
  add_format_option(*paths_cmd, f);

  auto* matrix_cmd = app.add_subcommand("matrix", "Exchange matrix and initial coefficients");
  const Options matrix_opts = add_problem_options(*matrix_cmd, f);
  add_format_option(*matrix_cmd, f);

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive verification sweep for rank n");
  verify_cmd->add_option("--n", f.n, "Rank n")->required();
  verify_cmd->add_option("--level", f.level, "Sweep depth")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format_option(*verify_cmd, f);

  auto* tri_cmd = app.add_subcommand("triangulations", "List all triangulations for rank n");
  tri_cmd->add_option("--n", f.n, "Rank n")->required();
  add_format_option(*tri_cmd, f);

  auto* graph_cmd = app.add_subcommand("graph", "Flip graph (DOT text or JSON)");
  graph_cmd->add_option("--n", f.n, "Rank n")->required();
  add_format_option(*graph_cmd, f);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const Format format = format_of(f);
    if (expand_cmd->parsed()) return cmd_expand(resolve_spec(f, expand_opts), format, out);
    if (paths_cmd->parsed()) return cmd_paths(resolve_spec(f, paths_opts), format, out);
    if (matrix_cmd->parsed()) return cmd_matrix(resolve_spec(f, matrix_opts), format, out);
    if (verify_cmd->parsed()) {
      return cmd_verify(f.n, f.level == "full" ? VerifyLevel::full : VerifyLevel::quick, f.jobs,
                        format, out);
    }
    if (tri_cmd->parsed()) return cmd_triangulations(f.n, format, out);
    if (graph_cmd->parsed()) return cmd_graph(f.n, format, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace ptolemy::cli
