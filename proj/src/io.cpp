#include "io.hpp"

#include <sstream>

#include "errors.hpp"

namespace omc {

namespace {

std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

std::vector<std::size_t> one_based(std::uint32_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= n; ++i)
    if ((mask >> (i - 1)) & 1u) out.push_back(i);
  return out;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  throw ParseError("expected an integer or a rational string, got " + j.dump());
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<RatVector> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError("matrix row must be an array");
    RatVector row;
    for (const auto& x : r) row.push_back(rational_from_json(x));
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("matrix rows differ in length");
    rows.push_back(std::move(row));
  }
  return RatMatrix::from_rows(rows);
}

RatMatrix matrix_from_csv(const std::string& text) {
  std::vector<RatVector> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    RatVector row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(Rational::parse(cell));
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("CSV rows differ in length");
    rows.push_back(std::move(row));
  }
  return RatMatrix::from_rows(rows);
}

Digraph digraph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("edges")) {
    throw ParseError("digraph needs \"nodes\" and \"edges\"");
  }
  const std::size_t n = as_index(j.at("nodes"), "nodes");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (!j.at("edges").is_array()) throw ParseError("edges must be an array");
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a [tail, head] pair");
    const std::size_t t = as_index(e[0], "edge endpoint"), h = as_index(e[1], "edge endpoint");
    if (t < 1 || t > n || h < 1 || h > n) throw ParseError("edge endpoint outside 1.." + std::to_string(n));
    edges.emplace_back(t - 1, h - 1);
  }
  return Digraph(n, std::move(edges));
}

VPolytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw ParseError("polytope needs \"vertices\"");
  const RatMatrix v = matrix_from_json(j.at("vertices"));
  std::size_t d = v.cols();
  if (j.contains("dim")) {
    d = as_index(j.at("dim"), "dim");
    if (v.rows() > 0 && v.cols() != d) throw ParseError("vertex length differs from dim");
  }
  if (v.rows() == 0) throw ParseError("polytope needs at least one vertex");
  std::vector<RatVector> verts;
  for (std::size_t i = 0; i < v.rows(); ++i) verts.push_back(v.row(i));
  return VPolytope(d, std::move(verts));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

Json to_json(const RatMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const Digraph& g) {
  Json edges = Json::array();
  for (const auto& [t, h] : g.edges) edges.push_back({t + 1, h + 1});
  Json j;
  j["nodes"] = g.node_count;
  j["edges"] = edges;
  return j;
}

Json to_json(const VPolytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  Json j;
  j["dim"] = p.ambient_dim();
  j["vertices"] = verts;
  return j;
}

Json to_json(const LinearConstraint& c) {
  Json j;
  j["a"] = to_json(c.a);
  j["b"] = c.b.to_string();
  return j;
}

Json to_json(const HRep& h) {
  Json ineqs = Json::array(), eqs = Json::array();
  for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
    Json c = to_json(h.inequalities[i]);
    if (i < h.facet_vertices.size()) c["vertex_indices"] = to_json(h.facet_vertices[i]);
    ineqs.push_back(c);
  }
  for (const auto& e : h.equations) eqs.push_back(to_json(e));
  Json j;
  j["dim"] = h.ambient_dim;
  j["ineqs"] = ineqs;
  j["eqs"] = eqs;
  return j;
}

Json to_json(const CircuitSet& c) {
  Json a = Json::array();
  for (const auto& x : c.circuits()) {
    Json e;
    e["signs"] = x.sign_string();
    e["sets"] = x.set_string();
    a.push_back(e);
  }
  return a;
}

Json to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.get_str());
  if (a.empty()) a.push_back("0");
  return a;
}

Json to_json(const RatPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.to_string());
  if (a.empty()) a.push_back("0");
  return a;
}

Json to_json(const FaceLabel& l) {
  Json j;
  j["S"] = one_based(l.s, l.n);
  j["T"] = one_based(l.t, l.n);
  return j;
}

Json to_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json to_json(const AxiomReport& r) {
  Json j;
  j["passed"] = r.passed;
  if (!r.passed) {
    j["axiom"] = r.axiom;
    j["witness"] = r.witness;
  }
  return j;
}

}  // namespace omc
