#include "reports.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace omc {

namespace {

constexpr std::size_t kMaxVerifyN = 5;
constexpr std::size_t kMaxTableN = 6;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json subset_json(std::uint32_t mask, std::size_t n) {
  Json a = Json::array();
  for (std::size_t i = 1; i <= n; ++i)
    if ((mask >> (i - 1)) & 1u) a.push_back(i);
  return a;
}

bool orthogonal(const SignedSet& x, const SignedSet& y) {
  bool same = false, opposite = false;
  for (std::size_t e = 0; e < x.ground_size(); ++e) {
    const int p = x.sign_at(e) * y.sign_at(e);
    if (p > 0) same = true;
    if (p < 0) opposite = true;
  }
  return same == opposite;
}

RatMatrix matrix_of(const Input& in) {
  if (in.kind == InputKind::Digraph) return in.graph.incidence_matrix();
  if (in.kind == InputKind::Matrix) return in.matrix;
  throw DomainError("a matrix or digraph input is required");
}

VPolytope polytope_of(const Input& in, bool dual) {
  if (in.polytope) {
    if (dual) throw DomainError("--dual applies to matrix or digraph input");
    return *in.polytope;
  }
  const CircuitSet c = circuits_of(in, dual);
  if (c.empty()) throw DomainError(std::string("no ") + (dual ? "cocircuits" : "circuits") + ": the polytope is empty");
  return omc_polytope(c);
}

std::size_t component_count(const Digraph& g) { return g.components().size(); }

Json faces_json(const std::vector<FaceRecord>& faces) {
  Json a = Json::array();
  for (const auto& f : faces) {
    Json j;
    j["dim"] = f.dim;
    j["vertex_indices"] = to_json(f.vertex_indices);
    a.push_back(j);
  }
  return a;
}

Json element_json(const Permutation& sigma) {
  Json j;
  j["cycles"] = sigma.cycle_string();
  j["one_line"] = sigma.one_line();
  return j;
}

Json series_json(const HStarSeries& s) {
  Json factors = Json::array();
  factors.push_back(to_json(s.eulerian_factor));
  for (const auto& f : s.cycle_factors) factors.push_back(to_json(f));
  Json j;
  j["numerator_factors"] = factors;
  j["denominator_cycle_lengths"] = to_json(s.cycle_lengths);
  return j;
}

bool is_nonnegative(const IntPolynomial& p) {
  for (const auto& c : p.coefficients())
    if (c < 0) return false;
  return true;
}

}  // namespace

void Report::check(const std::string& name, bool ok, Json detail) {
  if (!json.contains("checks")) json["checks"] = Json::array();
  Json c;
  c["name"] = name;
  c["passed"] = ok;
  if (!detail.is_null()) c["detail"] = std::move(detail);
  json["checks"].push_back(std::move(c));
  passed = passed && ok;
}

Input parse_input(const std::string& text, InputKind kind) {
  Input in;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (kind == InputKind::Auto) {
    if (first == std::string::npos) throw ParseError("empty input");
    if (text[first] == '[') {
      kind = InputKind::Matrix;
    } else if (text[first] == '{') {
      const Json j = parse_json(text);
      if (j.contains("edges")) kind = InputKind::Digraph;
      else if (j.contains("vertices")) kind = InputKind::Polytope;
      else throw ParseError("JSON object is neither a digraph nor a polytope");
    } else {
      in.kind = InputKind::Matrix;
      in.matrix = matrix_from_csv(text);
      in.echo["kind"] = "matrix";
      in.echo["matrix"] = to_json(in.matrix);
      return in;
    }
  }
  in.kind = kind;
  switch (kind) {
    case InputKind::Matrix: {
      const bool json_text = first != std::string::npos && text[first] == '[';
      in.matrix = json_text ? matrix_from_json(parse_json(text)) : matrix_from_csv(text);
      in.echo["kind"] = "matrix";
      in.echo["matrix"] = to_json(in.matrix);
      break;
    }
    case InputKind::Digraph:
      in.graph = digraph_from_json(parse_json(text));
      in.echo["kind"] = "digraph";
      in.echo["digraph"] = to_json(in.graph);
      break;
    case InputKind::Polytope:
      in.polytope = polytope_from_json(parse_json(text));
      in.echo["kind"] = "polytope";
      in.echo["polytope"] = to_json(*in.polytope);
      break;
    case InputKind::Auto:
      break;
  }
  return in;
}

CircuitSet circuits_of(const Input& in, bool dual) {
  switch (in.kind) {
    case InputKind::Matrix:
      return dual ? cocircuits_from_matrix(in.matrix) : circuits_from_matrix(in.matrix);
    case InputKind::Digraph:
      return dual ? cocircuits_from_digraph(in.graph) : circuits_from_digraph(in.graph);
    default:
      throw DomainError("circuits need a matrix or digraph input");
  }
}

Report circuits_report(const Input& in, bool dual, bool verify) {
  Report r;
  const CircuitSet c = circuits_of(in, dual);
  r.json["command"] = "circuits";
  r.json["input"] = in.echo;
  r.json["dual"] = dual;
  r.json["ground_size"] = c.ground_size();
  r.json["count"] = c.size();
  r.json["circuits"] = to_json(c);
  const AxiomReport ax = validate_circuit_axioms(c);
  r.json["axioms"] = to_json(ax);
  r.check("circuit axioms C0-C3", ax.passed, ax.passed ? Json(nullptr) : Json(ax.axiom + ": " + ax.witness));
  if (!verify) return r;

  const RatMatrix m = matrix_of(in);
  if (in.kind == InputKind::Digraph) {
    const CircuitSet viam = dual ? cocircuits_from_matrix(m) : circuits_from_matrix(m);
    r.check("digraph and incidence-matrix enumerations agree", viam == c);
  }
  const auto kernel = kernel_basis(m);
  if (kernel.empty()) {
    r.check("no circuits without a kernel", dual || c.empty());
  } else {
    const RatMatrix k = RatMatrix::from_rows(kernel);
    const CircuitSet other = dual ? circuits_from_matrix(k) : cocircuits_from_matrix(k);
    r.check("duality with the kernel matrix", other == c);
  }
  const CircuitSet opposite = dual ? circuits_from_matrix(m) : cocircuits_from_matrix(m);
  bool orth = true;
  for (const auto& x : c.circuits())
    for (const auto& y : opposite.circuits())
      if (!orthogonal(x, y)) orth = false;
  r.check("circuits are orthogonal to cocircuits", orth);
  return r;
}

Report polytope_report(const Input& in, bool dual, const std::string& what, unsigned t, bool verify,
                       std::size_t max_face_dim) {
  static const std::set<std::string> kinds{"dim", "facets", "faces", "ehrhart", "hstar", "count"};
  if (!kinds.count(what)) throw Error(ErrorKind::Invalid, "unknown polytope query '" + what + "'");
  Report r;
  const VPolytope p = polytope_of(in, dual);
  const std::size_t d = p.dimension();
  r.json["command"] = "polytope";
  r.json["input"] = in.echo;
  r.json["dual"] = dual;
  r.json["what"] = what;
  r.json["ambient_dim"] = p.ambient_dim();
  r.json["vertex_count"] = p.vertex_count();
  r.json["dimension"] = d;

  if (what == "dim") {
    if (verify) {
      r.check("every listed point is a vertex", certify_vertices(p).passed);
      if (in.kind == InputKind::Digraph) {
        const std::size_t v = in.graph.node_count, e = in.graph.edges.size(), k = component_count(in.graph);
        const std::size_t expected = dual ? v - k : e + k - v;
        r.check(dual ? "dimension equals |V|-k" : "dimension equals |E|-|V|+k", d == expected,
                Json{{"expected", expected}});
      }
    }
  } else if (what == "facets") {
    const HRep h = facets(p);
    Json sizes = Json::array();
    for (const auto& f : h.facet_vertices) sizes.push_back(f.size());
    r.json["facet_count"] = h.inequalities.size();
    r.json["facet_vertex_counts"] = sizes;
    r.json["hrep"] = to_json(h);
    if (verify) {
      bool valid = true;
      for (const auto& v : p.vertices()) valid = valid && h.contains(v);
      r.check("all vertices satisfy the inequalities", valid);
      bool spanning = true;
      for (const auto& f : h.facet_vertices) {
        std::vector<RatVector> diffs;
        for (std::size_t i = 1; i < f.size(); ++i) diffs.push_back(p.vertices()[f[i]] - p.vertices()[f[0]]);
        spanning = spanning && rank(RatMatrix::from_rows(diffs, p.ambient_dim())) + 1 == d;
      }
      r.check("each facet spans a hyperplane of the affine hull", spanning);
    }
  } else if (what == "faces") {
    const auto faces = face_lattice(p, max_face_dim);
    const auto fv = f_vector(faces);
    r.json["f_vector"] = to_json(fv);
    r.json["faces"] = faces_json(faces);
    if (verify) {
      long euler = 0;
      for (std::size_t i = 0; i < fv.size(); ++i) euler += (i % 2 ? -1 : 1) * static_cast<long>(fv[i]);
      r.check("Euler relation", euler == 1);
    }
  } else if (what == "ehrhart" || what == "hstar") {
    const EhrhartData e = ehrhart(p);
    if (what == "ehrhart") {
      Json counts = Json::array();
      for (const auto& c : e.counts) counts.push_back(c.get_str());
      r.json["counts"] = counts;
      r.json["ehrhart"] = to_json(e.polynomial);
    }
    r.json["h_star"] = to_json(e.h_star);
    if (verify) {
      const unsigned extra = static_cast<unsigned>(d + 1);
      const BigInt counted = lattice_count(p, extra);
      r.check("polynomial predicts L(d+1)", Rational(counted) == e.polynomial(Rational(static_cast<long>(extra))),
              Json{{"t", extra}, {"count", counted.get_str()}});
      r.check("h* is nonnegative", is_nonnegative(e.h_star));
    }
  } else {
    const BigInt c = lattice_count(p, t);
    r.json["t"] = t;
    r.json["count"] = c.get_str();
    if (verify && p.is_lattice()) {
      const EhrhartData e = ehrhart(p);
      r.check("count agrees with the Ehrhart polynomial", Rational(c) == e.polynomial(Rational(static_cast<long>(t))));
    }
  }
  return r;
}

Report family_report(std::size_t n, const std::string& what, bool verify, std::size_t max_face_dim) {
  static const std::set<std::string> kinds{"vertices", "fpoly", "ehrhart", "faces", "sep-dual-check"};
  if (!kinds.count(what)) throw Error(ErrorKind::Invalid, "unknown family query '" + what + "'");
  const auto labels = subset_labels(n);  // validates n
  if ((verify || what == "sep-dual-check") && n > kMaxVerifyN) {
    throw GuardError("generic cross-checks are limited to n <= " + std::to_string(kMaxVerifyN));
  }
  Report r;
  r.json["command"] = "family";
  r.json["n"] = n;
  r.json["what"] = what;
  const VPolytope p = build_family_polytope(n);

  if (what == "vertices") {
    Json verts = Json::array();
    for (const auto& l : labels) {
      Json v;
      v["I"] = subset_json(l.mask, n);
      v["u"] = to_json(vertex_u(l));
      v["u_hat"] = to_json(vertex_u_hat(l));
      verts.push_back(v);
    }
    r.json["count"] = labels.size();
    r.json["vertices"] = verts;
    if (verify) {
      std::vector<RatVector> gens;
      for (std::size_t i = 1; i <= n; ++i) gens.push_back(u_generator(n, i));
      r.check("vertices are the zonotope of u_1..u_n", same_vertex_set(zonotope(gens), p));
      bool proj = true;
      for (const auto& l : labels) proj = proj && project_pi(n, vertex_u_hat(l)) == vertex_u(l);
      r.check("projection of each cut vector is u_I", proj);
      r.check("every label gives a vertex", certify_vertices(p).passed);
      r.check("dimension is n-1", p.dimension() == n - 1);
    }
  } else if (what == "fpoly") {
    const IntPolynomial f = f_polynomial(n);
    r.json["f_poly"] = to_json(f);
    if (verify) {
      const auto fv = f_vector(face_lattice(p, std::max(max_face_dim, n - 1)));
      bool same = f.degree() + 1 == static_cast<long>(fv.size());
      for (std::size_t i = 0; same && i < fv.size(); ++i) same = f.coeff(i) == fv[i];
      r.check("closed form matches the generic face lattice", same, Json{{"generic", to_json(fv)}});
    }
  } else if (what == "ehrhart") {
    const IntPolynomial l = family_ehrhart(n);
    r.json["ehrhart"] = to_json(l);
    r.json["h_star"] = to_json(eulerian_polynomial(n));
    r.json["series_denominator_exponent"] = n;
    if (verify) {
      const LatticeCounter projected(p), embedded(build_family_polytope(n, true));
      Json counts = Json::array();
      bool ok = true;
      for (unsigned t = 0; t <= 3; ++t) {
        const BigInt a = projected.count(t), b = embedded.count(t);
        counts.push_back({a.get_str(), b.get_str()});
        ok = ok && a == l(BigInt(t)) && b == a;
      }
      r.check("projected and embedded lattice counts match (t+1)^n - t^n for t <= 3", ok, counts);
      r.check("generic h* is the Eulerian polynomial", ehrhart(p).h_star == eulerian_polynomial(n));
    }
  } else if (what == "faces") {
    if (n - 1 > max_face_dim) {
      throw GuardError("face enumeration is limited to dimension " + std::to_string(max_face_dim));
    }
    Json faces = Json::array();
    const auto fl = face_labels(n);
    for (const auto& l : fl) {
      Json j = to_json(l);
      j["dim"] = l.dim();
      Json vs = Json::array();
      for (std::size_t i : face_from_label(l).vertex_indices) vs.push_back(subset_json(labels[i].mask, n));
      j["vertices"] = vs;
      faces.push_back(j);
    }
    r.json["count"] = fl.size();
    r.json["faces"] = faces;
    if (verify) {
      std::set<std::vector<std::size_t>> generic, closed;
      for (const auto& f : face_lattice(p, std::max(max_face_dim, n - 1)))
        if (f.vertex_indices.size() < p.vertex_count()) generic.insert(f.vertex_indices);
      for (const auto& l : fl) closed.insert(face_from_label(l).vertex_indices);
      r.check("labels give exactly the proper faces", generic == closed && closed.size() == fl.size());
    }
  } else {
    const VPolytope sep = sep_complete_graph(n);
    const VPolytope dual = polar_dual(sep);
    r.json["sep_vertex_count"] = sep.vertex_count();
    r.json["dual_vertex_count"] = dual.vertex_count();
    r.check("polar dual of the symmetric edge polytope is the family polytope", same_vertex_set(dual, p));
  }
  return r;
}

Report equivariant_report(std::size_t n, const std::optional<std::string>& sigma, bool verify) {
  (void)subset_labels(n);  // validates n
  if (verify && n > kMaxVerifyN) {
    throw GuardError("generic cross-checks are limited to n <= " + std::to_string(kMaxVerifyN));
  }
  Report r;
  r.json["command"] = "equivariant";
  r.json["n"] = n;
  if (sigma) {
    const Permutation s = Permutation::parse(n, *sigma);
    const HStarSeries series = hstar_series(s);
    const CharacterDet det = character_det(s);
    r.json["sigma"] = element_json(s);
    r.json["cycle_type"] = to_json(s.cycle_type());
    r.json["action_matrix"] = to_json(action_matrix(s));
    r.json["fixed_polytope"] = to_json(fixed_polytope(s));
    r.json["fixed_ehrhart"] = to_json(fixed_ehrhart(s));
    r.json["det_reduced"] = to_json(det.reduced);
    r.json["det_full"] = to_json(det.full);
    r.json["series"] = series_json(series);
    r.json["h_star_series"] = to_json(series.numerator);
    if (verify) {
      const ElementCheck c = verify_element(s);
      r.check("closed-form fixed polytope equals the generic fixed subpolytope", c.fixed_polytope_matches);
      r.check("fixed lattice counts match (t+1)^k - t^k for t <= 3", c.counts_match);
    }
    return r;
  }
  if (n > kMaxTableN) throw GuardError("class tables are limited to n <= " + std::to_string(kMaxTableN));
  Json rows = Json::array();
  for (const auto& row : equivariant_table(n)) {
    Json j;
    j["cycle_type"] = to_json(row.cycle_type);
    j["class_size"] = row.class_size;
    j["representative"] = element_json(row.representative);
    j["fixed_ehrhart"] = to_json(row.fixed_ehrhart);
    j["det_full"] = to_json(row.det.full);
    j["series"] = series_json(row.series);
    j["h_star_series"] = to_json(row.series.numerator);
    rows.push_back(j);
  }
  r.json["rows"] = rows;
  r.check("H* is constant on conjugacy classes", true);
  if (verify) {
    bool poly = true, counts = true;
    for (const auto& s : Permutation::all(n)) {
      const ElementCheck c = verify_element(s);
      poly = poly && c.fixed_polytope_matches;
      counts = counts && c.counts_match;
    }
    r.check("closed-form fixed polytopes equal generic fixed subpolytopes for all elements", poly);
    r.check("fixed lattice counts match (t+1)^k - t^k for t <= 3", counts);
  }
  return r;
}

Report reproduce_report(const std::string& dir) {
  Report r;
  r.json["command"] = "reproduce";
  auto load = [&](const std::string& name, InputKind kind) { return parse_input(read_file(dir + "/" + name), kind); };
  auto has = [](const CircuitSet& c, std::size_t m, std::vector<std::size_t> pos, std::vector<std::size_t> neg) {
    for (auto& e : pos) --e;
    for (auto& e : neg) --e;
    return c.contains(SignedSet(m, pos, neg));
  };

  {
    const CircuitSet c = circuits_of(load("example_matrix.json", InputKind::Matrix), false);
    const bool listed = c.size() == 8 && has(c, 6, {5}, {}) && has(c, 6, {4}, {6}) && has(c, 6, {1, 3, 4}, {2}) &&
                        has(c, 6, {1, 3, 6}, {2});
    r.check("six-column example has the 8 listed circuits", listed, Json{{"count", c.size()}});
  }
  {
    const CircuitSet c = circuits_of(load("d3.json", InputKind::Matrix), false);
    r.check("D3 has 14 circuits including (1,36) and (36,45)",
            c.size() == 14 && has(c, 6, {1}, {3, 6}) && has(c, 6, {3, 6}, {4, 5}), Json{{"count", c.size()}});
  }
  {
    const Input b = load("b3plus.json", InputKind::Matrix);
    const std::size_t d1 = omc_polytope(circuits_of(b, false)).dimension();
    const std::size_t d2 = omc_polytope(circuits_of(b, true)).dimension();
    r.check("B3+ primal and dual polytopes have dimension 9", d1 == 9 && d2 == 9,
            Json{{"primal", d1}, {"dual", d2}});
  }
  {
    const Input k3 = load("k3.json", InputKind::Digraph);
    const CircuitSet c = circuits_of(k3, false), d = circuits_of(k3, true);
    r.check("K3 has circuits (+,-,+), (-,+,-) and six cocircuits",
            c.size() == 2 && c.contains(SignedSet::parse("(+,-,+)")) && d.size() == 6 &&
                d.contains(SignedSet::parse("(+,+,0)")) && d.contains(SignedSet::parse("(+,0,-)")) &&
                d.contains(SignedSet::parse("(0,+,+)")));
  }
  {
    const Input k4 = load("k4.json", InputKind::Digraph);
    const std::size_t dp = omc_polytope(circuits_of(k4, false)).dimension();
    const std::size_t dd = omc_polytope(circuits_of(k4, true)).dimension();
    r.check("K4 dimensions are |E|-|V|+1 = 3 and |V|-1 = 3", dp == 3 && dd == 3);
  }
  {
    const VPolytope p = omc_polytope(circuits_of(load("k4_minus_e.json", InputKind::Digraph), true));
    const HRep h = facets(p);
    std::size_t triangles = 0;
    for (const auto& f : h.facet_vertices)
      if (f.size() == 3) ++triangles;
    r.check("K4 minus an edge: 12 vertices, dimension 3, 14 facets, 8 triangles",
            p.vertex_count() == 12 && p.dimension() == 3 && h.inequalities.size() == 14 && triangles == 8,
            Json{{"vertices", p.vertex_count()}, {"facets", h.inequalities.size()}, {"triangles", triangles}});
  }
  {
    const CircuitSet c = circuits_of(load("bouquet3.json", InputKind::Digraph), false);
    const auto fv = f_vector(face_lattice(omc_polytope(c)));
    r.check("three-loop bouquet gives the octahedron", fv == std::vector<std::size_t>{6, 12, 8, 1});
  }
  for (std::size_t n = 3; n <= 5; ++n) {
    const Report f = family_report(n, "ehrhart", true, kDefaultMaxFaceDim);
    const Report g = family_report(n, "fpoly", true, kDefaultMaxFaceDim);
    r.check("family n=" + std::to_string(n) + " closed forms agree with the generic engine", f.passed && g.passed);
  }
  for (std::size_t n = 3; n <= 4; ++n) {
    r.check("polar dual of the symmetric edge polytope of K" + std::to_string(n),
            family_report(n, "sep-dual-check", false, kDefaultMaxFaceDim).passed);
  }
  {
    const auto rows = equivariant_table(4);
    const std::vector<std::string> hs{"1+11z+11z^2+z^3", "1+5z+5z^2+z^3", "1+3z+3z^2+z^3", "1+2z+2z^2+z^3",
                                      "1+z+z^2+z^3"};
    const std::vector<std::string> ls{"1+4t+6t^2+4t^3", "1+3t+3t^2", "1+2t", "1+2t", "1"};
    bool ok = rows.size() == 5;
    for (std::size_t i = 0; ok && i < 5; ++i)
      ok = rows[i].series.numerator.to_string("z") == hs[i] && rows[i].fixed_ehrhart.to_string("t") == ls[i];
    r.check("equivariant table of S4", ok);
  }
  {
    const Input c4 = load("c4.json", InputKind::Digraph);
    const VPolytope z = graphic_zonotope(c4.graph);
    RatMatrix swap(4, 4);
    const std::vector<std::size_t> image{0, 3, 2, 1};
    for (std::size_t j = 0; j < 4; ++j) swap(image[j], j) = 1;
    const std::size_t node_fixed = fixed_subpolytope(z, swap).vertex_count();
    const std::size_t label_fixed =
        fixed_subpolytope(build_family_polytope(4), action_matrix(Permutation::parse(4, "(2 4)"))).vertex_count();
    r.check("(24) fixes a hexagon of P_3 but a quadrilateral of the cycle zonotope",
            label_fixed == 6 && node_fixed == 4, Json{{"P3", label_fixed}, {"cycle_zonotope", node_fixed}});
  }
  return r;
}

}  // namespace omc
