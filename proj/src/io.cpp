#include "ptolemy/io.hpp"

#include <charconv>

#include "ptolemy/errors.hpp"

namespace ptolemy {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view text, std::string_view what) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

json pairs_to_json(std::span<const Arc> arcs) {
  json out = json::array();
  for (const Arc& a : arcs) out.push_back({a.lo(), a.hi()});
  return out;
}

VertexPair pair_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("vertex pair must be a 2-element array");
  return {j[0].get<int>(), j[1].get<int>()};
}

// Runs fn, converting JSON access errors into input errors.
template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

VertexPair parse_vertex_pair(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    throw InputError("vertex pair '" + std::string(text) + "' must look like a-b");
  }
  return {parse_int(text.substr(0, dash), "vertex"), parse_int(text.substr(dash + 1), "vertex")};
}

std::vector<VertexPair> parse_vertex_pairs(std::string_view text) {
  std::vector<VertexPair> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_vertex_pair(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_vertex_pairs(std::span<const Arc> arcs) {
  std::string out;
  for (const Arc& a : arcs) {
    if (!out.empty()) out += ',';
    out += std::to_string(a.lo()) + "-" + std::to_string(a.hi());
  }
  return out;
}

ProblemSpec problem_spec_from_json(const json& doc) {
  return guarded([&] {
    if (!doc.is_object()) throw InputError("spec file must contain a JSON object");
    ProblemSpec spec;
    spec.n = doc.at("n").get<int>();
    if (doc.contains("diagonals")) {
      for (const auto& d : doc.at("diagonals")) spec.diagonals.push_back(pair_from_json(d));
    }
    if (doc.contains("labels")) spec.label_order = doc.at("labels").get<std::vector<Label>>();
    if (doc.contains("target")) spec.target = pair_from_json(doc.at("target"));
    if (doc.contains("orient")) spec.orient = doc.at("orient").get<int>();
    spec.trivial_coefficients = doc.value("trivial_coefficients", false);
    return spec;
  });
}

json to_json(const ProblemSpec& spec) {
  json out{{"n", spec.n}};
  json diagonals = json::array();
  for (const auto& [u, v] : spec.diagonals) diagonals.push_back({u, v});
  out["diagonals"] = diagonals;
  if (!spec.label_order.empty()) out["labels"] = spec.label_order;
  if (spec.target) out["target"] = {spec.target->first, spec.target->second};
  if (spec.orient) out["orient"] = *spec.orient;
  out["trivial_coefficients"] = spec.trivial_coefficients;
  return out;
}

Triangulation triangulation_of(const ProblemSpec& spec) {
  if (spec.diagonals.empty()) return snake_triangulation(spec.n);
  if (spec.label_order.empty()) return build_triangulation(spec.n, spec.diagonals);
  return build_triangulation(spec.n, spec.diagonals, std::span<const Label>(spec.label_order));
}

std::pair<Arc, Vertex> oriented_target(const ProblemSpec& spec) {
  if (!spec.target) throw InputError("a target diagonal is required (--target a-b)");
  const auto [a, b] = *spec.target;
  if (a == b) throw InputError("target endpoints must differ");
  const Arc m(a, b);
  const Vertex orient = spec.orient.value_or(a);
  if (!m.has_endpoint(orient)) {
    throw InputError("--orient " + std::to_string(orient) + " is not an endpoint of the target");
  }
  return {m, orient};
}

json polynomial_to_json(const LaurentPolynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    terms.push_back({{"coefficient", c.get_str()}, {"exponents", e}});
  }
  return {{"num_variables", f.num_variables()}, {"terms", terms}};
}

LaurentPolynomial polynomial_from_json(const json& doc) {
  return guarded([&] {
    LaurentPolynomial f(doc.at("num_variables").get<int>());
    for (const auto& term : doc.at("terms")) {
      Integer c;
      if (c.set_str(term.at("coefficient").get<std::string>(), 10) != 0) {
        throw InputError("coefficient is not a decimal integer");
      }
      f.add_term(term.at("exponents").get<ExponentVector>(), c);
    }
    return f;
  });
}

json expansion_document(const ProblemSpec& spec, const Triangulation& t, const Arc& target,
                        Vertex orient, const LaurentPolynomial& f) {
  return {{"schema", "ptolemy.expansion"},
          {"version", kSchemaVersion},
          {"labeling", kLabelingConvention},
          {"n", t.rank()},
          {"diagonals", pairs_to_json(t.diagonals())},
          {"target", {target.lo(), target.hi()}},
          {"orient", orient},
          {"trivial_coefficients", spec.trivial_coefficients},
          {"polynomial", polynomial_to_json(f)}};
}

LaurentPolynomial polynomial_from_expansion_document(const json& doc) {
  return guarded([&] {
    if (doc.at("schema").get<std::string>() != "ptolemy.expansion") {
      throw InputError("not an expansion document");
    }
    if (doc.at("version").get<int>() != kSchemaVersion) {
      throw InputError("unsupported expansion document version");
    }
    return polynomial_from_json(doc.at("polynomial"));
  });
}

json paths_document(const Triangulation& t, const Arc& target, Vertex orient,
                    std::span<const TPath> paths) {
  json list = json::array();
  for (const TPath& p : paths) {
    list.push_back({{"vertices", p.vertices},
                    {"labels", p.labels},
                    {"weight", to_string(path_weight(t, p))}});
  }
  return {{"schema", "ptolemy.paths"},
          {"version", kSchemaVersion},
          {"labeling", kLabelingConvention},
          {"n", t.rank()},
          {"diagonals", pairs_to_json(t.diagonals())},
          {"target", {target.lo(), target.hi()}},
          {"orient", orient},
          {"paths", list}};
}

}  // namespace ptolemy
