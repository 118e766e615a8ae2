#include "ncball/serialize.hpp"

#include <cstdio>
#include <stdexcept>

namespace ncball {

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("expected complex as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json point_to_json(const Point& p) {
  json out = json::array();
  for (int i = 0; i < p.dim(); ++i) out.push_back(complex_to_json(p.coords()(i)));
  return out;
}

Point point_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("expected point as nonempty array of [re, im]");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return Point(std::move(v));
}

json map_to_json(const MoebiusMap& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.matrix().rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.matrix().cols(); ++c)
      row.push_back(complex_to_json(m.matrix()(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MoebiusMap map_from_json(const json& j) {
  if (!j.is_array() || j.size() < 2)
    throw std::invalid_argument("expected map as (n+1)x(n+1) nested array");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Mat m(rows, rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[static_cast<std::size_t>(r)].is_array() ||
        static_cast<Eigen::Index>(j[static_cast<std::size_t>(r)].size()) != rows)
      throw std::invalid_argument("map rows must be square");
    for (Eigen::Index c = 0; c < rows; ++c)
      m(r, c) = complex_from_json(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  return MoebiusMap(std::move(m));
}

json poly_to_json(const NcPoly& p) {
  json out = json::array();
  for (const auto& [w, c] : p.coeffs())
    out.push_back(json{{"word", w}, {"coeff", complex_to_json(c)}});
  return out;
}

NcPoly poly_from_json(const json& j, int n) {
  if (!j.is_array()) throw std::invalid_argument("expected polynomial as array of terms");
  NcPoly p(n);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("word") || !term.contains("coeff"))
      throw std::invalid_argument("polynomial term needs {word, coeff}");
    p.add_term(term["word"].get<Word>(), complex_from_json(term["coeff"]));
  }
  return p;
}

namespace {

json node_to_json(const BallFunction::Node& node) {
  switch (node.kind) {
    case BallFunction::Kind::Linear: {
      json coeffs = json::array();
      for (Eigen::Index i = 0; i < node.coeffs.size(); ++i)
        coeffs.push_back(complex_to_json(node.coeffs(i)));
      return json{{"kind", "linear"}, {"coeffs", std::move(coeffs)}};
    }
    case BallFunction::Kind::Precompose:
      return json{{"kind", "precompose"},
                  {"map", map_to_json(*node.map)},
                  {"child", node_to_json(*node.children.front())}};
    case BallFunction::Kind::Product: {
      json factors = json::array();
      for (const auto& child : node.children) factors.push_back(node_to_json(*child));
      return json{{"kind", "product"}, {"dim", node.dim}, {"factors", std::move(factors)}};
    }
    case BallFunction::Kind::Scaled:
      return json{{"kind", "scaled"},
                  {"scalar", complex_to_json(node.scalar)},
                  {"child", node_to_json(*node.children.front())}};
  }
  throw std::logic_error("ball_function_to_json: unknown node kind");
}

}  // namespace

json ball_function_to_json(const BallFunction& f) { return node_to_json(f.root()); }

BallFunction ball_function_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("expected function node with kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "linear") {
    const auto& coeffs = j.at("coeffs");
    Vec v(static_cast<Eigen::Index>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      v(static_cast<Eigen::Index>(i)) = complex_from_json(coeffs[i]);
    return BallFunction::linear(std::move(v));
  }
  if (kind == "precompose")
    return ball_function_from_json(j.at("child")).precompose(map_from_json(j.at("map")));
  if (kind == "product") {
    const auto& factors = j.at("factors");
    const int n = j.at("dim").get<int>();
    if (factors.empty()) return BallFunction::one(n);
    std::vector<BallFunction> fs;
    for (const auto& f : factors) fs.push_back(ball_function_from_json(f));
    return BallFunction::product(std::move(fs));
  }
  if (kind == "scaled")
    return ball_function_from_json(j.at("child"))
        .scaled(complex_from_json(j.at("scalar")));
  throw std::invalid_argument("unknown function node kind: " + kind);
}

json operator_to_json(const FockOperator& t) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < t.matrix().rows(); ++r)
    for (Eigen::Index c = 0; c < t.matrix().cols(); ++c)
      entries.push_back(complex_to_json(t.matrix()(r, c)));
  return json{{"n", t.basis().alphabet()},
              {"d", t.basis().degree()},
              {"entries", std::move(entries)}};
}

json presentation_to_json(const GroupPresentation& g) {
  json gens = json::array();
  for (const auto& m : g.generators) gens.push_back(map_to_json(m));
  return json{{"n", g.n}, {"generators", std::move(gens)}};
}

GroupPresentation presentation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
    throw std::invalid_argument("presentation needs {n, generators}");
  GroupPresentation g;
  g.n = j.at("n").get<int>();
  if (g.n < 1) throw std::invalid_argument("presentation: n >= 1 required");
  for (const auto& gen : j.at("generators")) {
    MoebiusMap m = map_from_json(gen);
    if (m.dim() != g.n)
      throw std::invalid_argument("presentation: generator dimension mismatch");
    g.generators.push_back(std::move(m));
  }
  return g;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Convergent: return "convergent";
    case Verdict::Divergent: return "divergent";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

std::string check_name(CheckResult c) {
  switch (c) {
    case CheckResult::Pass: return "pass";
    case CheckResult::Fail: return "fail";
    case CheckResult::Undecided: return "undecided";
  }
  return "undecided";
}

std::string membership_name(Membership m) {
  switch (m) {
    case Membership::In: return "In";
    case Membership::Out: return "Out";
    case Membership::Undecided: return "Undecided";
  }
  return "Undecided";
}

json blaschke_to_json(const BlaschkeReport& r) {
  json shells = json::array();
  for (const auto& s : r.shells)
    shells.push_back(json{{"len", s.len}, {"count", s.count}, {"term_sum", s.term_sum}});
  json out{{"shells", std::move(shells)},
           {"partial_sums", r.partial_sums},
           {"decay_ratios", r.decay_ratios},
           {"total", r.total},
           {"exhausted", r.exhausted},
           {"verdict", verdict_name(r.verdict)}};
  out["fitted_ratio"] = r.fitted_ratio ? json(*r.fitted_ratio) : json();
  out["extrapolated_sum"] = r.extrapolated_sum ? json(*r.extrapolated_sum) : json();
  return out;
}

json membership_to_json(const MembershipVerdict& v) {
  json out{{"status", membership_name(v.status)},
           {"witness_value", v.witness_value},
           {"truncation", v.truncation},
           {"threshold", v.threshold}};
  if (v.witness) out["witness"] = witness_to_json(*v.witness);
  return out;
}

json witness_to_json(const VanishingProduct& w) {
  json pts = json::array();
  for (const auto& p : w.points) pts.push_back(point_to_json(p));
  return json{{"probe", point_to_json(w.probe)},
              {"points", std::move(pts)},
              {"base_map", map_to_json(w.base_map)},
              {"value_at_probe", w.value_at_probe},
              {"function", ball_function_to_json(w.witness)}};
}

json ergodicity_to_json(const ErgodicityReport& r) {
  return json{{"invariance_defect", r.invariance_defect},
              {"constancy_defect", r.constancy_defect},
              {"tol", r.tol},
              {"implication_holds", r.implication_holds},
              {"n_elements", r.n_elements},
              {"n_orbit_points", r.n_orbit_points}};
}

std::string orbit_to_csv(const Orbit& orbit) {
  std::string out;
  const int n = orbit.points.empty() ? 0 : orbit.points.front().dim();
  for (int i = 1; i <= n; ++i) {
    out += "re" + std::to_string(i) + ",im" + std::to_string(i) + ",";
  }
  out += "shell\n";
  char buf[64];
  for (std::size_t i = 0; i < orbit.points.size(); ++i) {
    for (int c = 0; c < n; ++c) {
      const Complex z = orbit.points[i].coords()(c);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,", z.real(), z.imag());
      out += buf;
    }
    out += std::to_string(orbit.shells[i]);
    out += '\n';
  }
  return out;
}

}  // namespace ncball
