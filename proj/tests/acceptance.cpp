// End-to-end acceptance run: one PASS/FAIL line per criterion, all exact.
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "equivariant.hpp"
#include "family.hpp"
#include "io.hpp"
#include "matroid.hpp"
#include "oracles.hpp"
#include "polytope.hpp"

#ifndef OMCLAB_FIXTURE_DIR
#define OMCLAB_FIXTURE_DIR "fixtures"
#endif

using namespace omc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(OMCLAB_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RatMatrix load_matrix(const std::string& name) { return matrix_from_json(parse_json(slurp(name))); }
Digraph load_graph(const std::string& name) { return digraph_from_json(parse_json(slurp(name))); }

SignedSet ss(std::size_t m, std::vector<std::size_t> pos, std::vector<std::size_t> neg) {
  for (auto& e : pos) --e;
  for (auto& e : neg) --e;
  return SignedSet(m, pos, neg);
}

std::vector<RatVector> incidence_vectors(const CircuitSet& c) {
  std::vector<RatVector> out;
  for (const auto& x : c.circuits()) out.push_back(x.incidence_vector());
  return out;
}

std::set<RatVector> vertex_set(const VPolytope& p) {
  return std::set<RatVector>(p.vertices().begin(), p.vertices().end());
}

// Connected simple graph: random spanning tree plus random extra edges, with
// random orientations. Trees are part of the corpus.
Digraph random_connected(oracle::Lcg& rng, std::size_t n) {
  std::set<std::pair<std::size_t, std::size_t>> used;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto add = [&](std::size_t a, std::size_t b) {
    const auto key = std::minmax(a, b);
    if (a == b || !used.insert(key).second) return;
    if (rng.below(2)) std::swap(a, b);
    edges.emplace_back(a, b);
  };
  for (std::size_t v = 1; v < n; ++v) add(v, rng.below(v));
  const std::size_t attempts = rng.below(n * n);
  for (std::size_t i = 0; i < attempts; ++i) add(rng.below(n), rng.below(n));
  return Digraph(n, edges);
}

RatMatrix random_matrix(oracle::Lcg& rng) {
  const std::size_t r = 1 + rng.below(3), c = r + 1 + rng.below(4);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng.below(5)) - 2;
  return m;
}

Rational leibniz_det(const std::vector<RatVector>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  Rational total(0);
  do {
    Rational term(1);
    for (std::size_t i = 0; i < n; ++i) term *= a[i][p[i]];
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

IntPolynomial one_minus_z_pow(std::size_t l) {
  std::vector<BigInt> c(l + 1, BigInt(0));
  c[0] = 1;
  c[l] = -1;
  return IntPolynomial(c);
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const CircuitSet c = circuits_from_matrix(load_matrix("example_matrix.json"));
  const CircuitSet listed(6, {ss(6, {5}, {}), -ss(6, {5}, {}), ss(6, {4}, {6}), -ss(6, {4}, {6}),
                              ss(6, {1, 3, 4}, {2}), -ss(6, {1, 3, 4}, {2}), ss(6, {1, 3, 6}, {2}),
                              -ss(6, {1, 3, 6}, {2})});
  o.require(c == listed, "six-column example differs from the 8 listed circuits");
  const RatMatrix d3 = load_matrix("d3.json");
  const CircuitSet d = circuits_from_matrix(d3);
  o.require(d.size() == 14, "D3 has " + std::to_string(d.size()) + " circuits");
  o.require(d.contains(ss(6, {1}, {3, 6})) && d.contains(ss(6, {3, 6}, {4, 5})), "D3 misses (1,36) or (36,45)");
  o.require(oracle::sign_vectors(d) == oracle::minimal_sign_vectors(kernel_basis(d3), 6),
            "D3 circuits disagree with support search");
  o.detail = o.ok ? "8 and 14 circuits" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  oracle::Lcg rng(20240611);
  std::size_t graphs = 0, trees = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int k = 0; k < 12; ++k) {
      const Digraph g = random_connected(rng, n);
      const std::size_t e = g.edges.size(), v = g.node_count;
      const std::string tag = "graph " + std::to_string(graphs) + " (" + std::to_string(v) + " nodes, " +
                              std::to_string(e) + " edges)";
      const CircuitSet c = circuits_from_digraph(g), d = cocircuits_from_digraph(g);
      // The primal polytope is empty for a forest; its circuit span has dimension 0.
      std::size_t dp = 0;
      if (c.empty()) {
        ++trees;
      } else {
        dp = omc_polytope(c).dimension();
        o.require(dp == oracle::affine_dim(incidence_vectors(c)), tag + ": primal dimension vs oracle");
      }
      const std::size_t dd = omc_polytope(d).dimension();
      o.require(dd == oracle::affine_dim(incidence_vectors(d)), tag + ": dual dimension vs oracle");
      o.require(dp == e - v + 1, tag + ": primal dimension " + std::to_string(dp));
      o.require(dd == v - 1, tag + ": dual dimension " + std::to_string(dd));
      o.require(dp + dd == e, tag + ": dimensions do not sum to |E|");
      ++graphs;
    }
  }
  o.require(graphs >= 50, "corpus too small");
  if (o.ok) o.detail = std::to_string(graphs) + " connected graphs, " + std::to_string(trees) + " trees";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const RatMatrix b = load_matrix("b3plus.json");
  const std::size_t d1 = omc_polytope(circuits_from_matrix(b)).dimension();
  const std::size_t d2 = omc_polytope(cocircuits_from_matrix(b)).dimension();
  o.require(d1 == 9 && d2 == 9, "dimensions " + std::to_string(d1) + ", " + std::to_string(d2));
  if (o.ok) o.detail = "primal 9, dual 9";
  return o;
}

// P(G) for a bridge b must be the suspension of P(G \ b) by the apexes +-e_b.
void check_suspension(Outcome& o, const Digraph& g, std::size_t b, const std::string& tag) {
  const std::size_t m = g.edges.size();
  const VPolytope p = omc_polytope(cocircuits_from_digraph(g));
  const VPolytope base = omc_polytope(cocircuits_from_digraph(g.without_edge(b)));
  std::set<RatVector> expected;
  RatVector apex(m);
  apex[b] = 1;
  expected.insert(apex);
  apex[b] = -1;
  expected.insert(apex);
  for (const auto& v : base.vertices()) {
    RatVector w(v.begin(), v.end());
    w.insert(w.begin() + static_cast<long>(b), Rational(0));
    expected.insert(w);
  }
  o.require(vertex_set(p) == expected, tag + ": vertices are not the apexes plus the base");
  o.require(p.dimension() == base.dimension() + 1, tag + ": dimension");
  const HRep h = facets(p), hb = facets(base);
  o.require(h.inequalities.size() == 2 * hb.inequalities.size(), tag + ": facet count");
  for (std::size_t f = 0; f < h.inequalities.size(); ++f) {
    std::size_t apexes = 0;
    for (std::size_t i : h.facet_vertices[f])
      if (p.vertices()[i][b] != 0) ++apexes;
    o.require(apexes == 1, tag + ": a facet does not contain exactly one apex");
  }
}

Outcome criterion4() {
  Outcome o;
  // Triangle with a pendant edge, and two triangles joined by an edge.
  const Digraph pendant(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  const Digraph barbell(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  o.require(pendant.bridges() == std::vector<std::size_t>{3}, "pendant bridge not detected");
  o.require(barbell.bridges() == std::vector<std::size_t>{3}, "barbell bridge not detected");
  check_suspension(o, pendant, 3, "pendant triangle");
  check_suspension(o, barbell, 3, "barbell");
  const VPolytope oct = omc_polytope(circuits_from_digraph(load_graph("bouquet3.json")));
  const auto fv = f_vector(face_lattice(oct));
  o.require(fv == std::vector<std::size_t>{6, 12, 8, 1}, "bouquet f-vector");
  std::set<RatVector> cross;
  for (std::size_t i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      RatVector v(3);
      v[i] = s;
      cross.insert(v);
    }
  o.require(vertex_set(oct) == cross, "bouquet vertices are not +-e_i");
  if (o.ok) o.detail = "two bridge suspensions, bouquet f-vector (6,12,8)";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const CircuitSet d = cocircuits_from_digraph(load_graph("k4_minus_e.json"));
  const VPolytope p = omc_polytope(d);
  const HRep h = facets(p);
  std::size_t triangles = 0;
  for (const auto& f : h.facet_vertices)
    if (f.size() == 3) ++triangles;
  o.require(oracle::hull_vertices(incidence_vectors(d)).size() == 12, "oracle vertex count");
  o.require(p.vertex_count() == 12 && p.dimension() == 3 && h.inequalities.size() == 14 && triangles == 8,
            std::to_string(p.vertex_count()) + " vertices, dim " + std::to_string(p.dimension()) + ", " +
                std::to_string(h.inequalities.size()) + " facets, " + std::to_string(triangles) + " triangles");
  if (o.ok) o.detail = "12 vertices, dim 3, 14 facets, 8 triangles";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (std::size_t n = 3; n <= 5; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const VPolytope p = build_family_polytope(n);
    const VPolytope e = build_family_polytope(n, true);
    o.require(p.vertex_count() == (std::size_t{1} << n) - 2 && e.vertex_count() == p.vertex_count(),
              tag + ": vertex count");
    const auto fv = f_vector(face_lattice(p));
    const IntPolynomial fp = f_polynomial(n);
    bool f_ok = fp.degree() + 1 == static_cast<long>(fv.size());
    for (std::size_t i = 0; f_ok && i < fv.size(); ++i) f_ok = fp.coeff(i) == BigInt(fv[i]);
    o.require(f_ok, tag + ": f-polynomial vs face lattice");
    const LatticeCounter cp(p), ce(e);
    for (unsigned t = 1; t <= 3; ++t) {
      BigInt expected, a, b;
      mpz_ui_pow_ui(a.get_mpz_t(), t + 1, n);
      mpz_ui_pow_ui(b.get_mpz_t(), t, n);
      expected = a - b;
      o.require(cp.count(t) == expected, tag + ": projected count at t=" + std::to_string(t));
      o.require(ce.count(t) == expected, tag + ": embedded count at t=" + std::to_string(t));
      if (n <= 4)
        o.require(BigInt(oracle::count_lattice(p.vertices(), t)) == expected,
                  tag + ": oracle count at t=" + std::to_string(t));
    }
    const IntPolynomial hs = ehrhart(p).h_star;
    const auto desc = oracle::eulerian_by_descents(static_cast<int>(n));
    bool h_ok = hs == eulerian_polynomial(n);
    for (std::size_t i = 0; i < desc.size(); ++i) h_ok = h_ok && hs.coeff(i) == BigInt(desc[i]);
    o.require(h_ok, tag + ": h* is not the Eulerian polynomial");
  }
  if (o.ok) o.detail = "n=3,4,5";
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (std::size_t n = 3; n <= 4; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const VPolytope p = build_family_polytope(n);
    const VPolytope e = build_family_polytope(n, true);
    std::vector<RatVector> gens;
    for (std::size_t i = 1; i <= n; ++i) gens.push_back(u_generator(n, i));
    o.require(same_vertex_set(zonotope(gens), p), tag + ": not the zonotope of the generators");
    std::set<RatVector> projected;
    for (const auto& v : e.vertices()) projected.insert(project_pi(n, v));
    o.require(projected == vertex_set(p), tag + ": projection of the embedded vertices");
    std::set<RatVector> image;
    for (const auto& v : p.vertices()) image.insert(phi_to_graphic_zonotope(v));
    o.require(image.size() == p.vertex_count(), tag + ": phi is not injective on vertices");
    o.require(image == vertex_set(graphic_zonotope(Digraph::cycle(n))), tag + ": phi image is not Z_C");
    o.require(same_vertex_set(polar_dual(sep_complete_graph(n)), p), tag + ": polar dual of the SEP");
  }
  if (o.ok) o.detail = "n=3,4";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto rows = equivariant_table(4);
  struct Expected {
    std::vector<std::size_t> type;
    std::size_t size;
    IntPolynomial ehrhart;
    std::vector<IntPolynomial> numerator;
    std::vector<std::size_t> denominator;
    IntPolynomial hstar;
  };
  using P = IntPolynomial;
  const std::vector<Expected> table{
      {{1, 1, 1, 1}, 1, P{1, 4, 6, 4}, {P{1, 11, 11, 1}, P{1}}, {1, 1, 1, 1}, P{1, 11, 11, 1}},
      {{2, 1, 1}, 6, P{1, 3, 3}, {P{1, 4, 1}, P{1, 1}}, {1, 1, 2}, P{1, 5, 5, 1}},
      {{2, 2}, 3, P{1, 2}, {P{1, 1}, P{1, 1}, P{1, 1}}, {2, 2}, P{1, 3, 3, 1}},
      {{3, 1}, 8, P{1, 2}, {P{1, 1}, P{1, 1, 1}}, {1, 3}, P{1, 2, 2, 1}},
      {{4}, 6, P{1}, {P{1}, P{1, 1, 1, 1}}, {4}, P{1, 1, 1, 1}},
  };
  o.require(rows.size() == table.size(), "wrong number of cycle types");
  for (std::size_t i = 0; o.ok && i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto& x = table[i];
    const std::string tag = "row " + std::to_string(i + 1);
    o.require(r.cycle_type == x.type && r.class_size == x.size, tag + ": cycle type or class size");
    o.require(r.fixed_ehrhart == x.ehrhart, tag + ": fixed Ehrhart polynomial " + r.fixed_ehrhart.to_string());
    IntPolynomial want_num{1}, got_num = r.series.eulerian_factor;
    for (const auto& f : x.numerator) want_num = want_num * f;
    for (const auto& f : r.series.cycle_factors) got_num = got_num * f;
    o.require(got_num == want_num && r.series.numerator == want_num, tag + ": series numerator");
    auto lens = r.series.cycle_lengths;
    std::sort(lens.begin(), lens.end());
    o.require(lens == x.denominator, tag + ": series denominator");
    o.require(r.series.numerator == x.hstar, tag + ": H* " + r.series.numerator.to_string("z"));
    // det(I - M z) factors as prod (1 - z^l) / (1 - z).
    IntPolynomial prod{1};
    for (std::size_t l : x.type) prod = prod * one_minus_z_pow(l);
    o.require(r.det.full == prod && r.det.reduced * one_minus_z_pow(1) == prod, tag + ": determinant factorization");
    const RatMatrix m = action_matrix(r.representative);
    for (long z = -2; z <= 2; ++z) {
      std::vector<RatVector> a(3, RatVector(3));
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 3; ++q) a[p][q] = Rational(p == q ? 1 : 0) - Rational(z) * m(p, q);
      o.require(leibniz_det(a) == Rational(r.det.reduced(BigInt(z))), tag + ": determinant at z=" + std::to_string(z));
    }
    // The series expands to the fixed lattice counts.
    std::vector<BigInt> series(4, BigInt(0));
    std::vector<BigInt> num(4, BigInt(0));
    for (std::size_t k = 0; k < 4; ++k) num[k] = x.hstar.coeff(k);
    const IntPolynomial den = r.series.denominator();
    for (std::size_t k = 0; k < 4; ++k) {
      BigInt s = num[k];
      for (std::size_t j = 1; j <= k; ++j) s -= den.coeff(j) * series[k - j];
      series[k] = s;
    }
    const VPolytope fixed = fixed_subpolytope(build_family_polytope(4), m);
    for (unsigned t = 0; t <= 3; ++t)
      o.require(series[t] == lattice_count(fixed, t) && series[t] == x.ehrhart(BigInt(t)),
                tag + ": series coefficient " + std::to_string(t));
  }
  std::map<std::vector<std::size_t>, IntPolynomial> by_type;
  for (const auto& r : rows) by_type[r.cycle_type] = r.series.numerator;
  std::size_t elements = 0;
  for (const Permutation& s : Permutation::all(4)) {
    const ElementCheck c = verify_element(s);
    o.require(c.fixed_polytope_matches, s.cycle_string() + ": closed-form fixed polytope differs");
    o.require(c.counts_match, s.cycle_string() + ": fixed lattice counts differ");
    o.require(hstar_series(s).numerator == by_type[s.cycle_type()], s.cycle_string() + ": H* is not a class function");
    ++elements;
  }
  o.require(elements == 24, "S4 has " + std::to_string(elements) + " elements");
  if (o.ok) o.detail = "5 rows, 24 elements";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const Permutation sigma = Permutation::parse(4, "(2 4)");
  const std::size_t label_fixed = fixed_subpolytope(build_family_polytope(4), action_matrix(sigma)).vertex_count();
  RatMatrix swap(4, 4);
  for (std::size_t j = 1; j <= 4; ++j) swap(sigma(j) - 1, j - 1) = 1;
  const std::size_t node_fixed = fixed_subpolytope(graphic_zonotope(load_graph("c4.json")), swap).vertex_count();
  o.require(label_fixed == 6 && node_fixed == 4,
            std::to_string(label_fixed) + " vs " + std::to_string(node_fixed) + " vertices");
  if (o.ok) o.detail = "6 vs 4 vertices";
  return o;
}

Outcome criterion10() {
  Outcome o;
  oracle::Lcg rng(777);
  std::vector<CircuitSet> corpus;
  for (int i = 0; i < 40; ++i) {
    const RatMatrix m = random_matrix(rng);
    corpus.push_back(circuits_from_matrix(m));
    corpus.push_back(cocircuits_from_matrix(m));
  }
  for (int i = 0; i < 30; ++i) {
    const Digraph g = random_connected(rng, 2 + rng.below(4));
    corpus.push_back(circuits_from_digraph(g));
    corpus.push_back(cocircuits_from_digraph(g));
  }
  const std::size_t base = corpus.size();
  for (std::size_t i = 0; i < 20; ++i) {
    const CircuitSet& c = corpus[rng.below(base)];
    std::vector<std::size_t> flip;
    for (std::size_t e = 0; e < c.ground_size(); ++e)
      if (rng.below(2)) flip.push_back(e);
    corpus.push_back(reorient(c, flip));
    corpus.push_back(direct_sum(corpus[rng.below(base)], corpus[rng.below(base)]));
  }
  std::size_t nonempty = 0, dropped = 0, supersets = 0;
  for (const auto& c : corpus) {
    const AxiomReport r = validate_circuit_axioms(c);
    o.require(r.passed, "generated set fails " + r.axiom + ": " + r.witness);
    if (c.empty()) continue;
    ++nonempty;
    // Drop the negation of one member.
    std::vector<SignedSet> members = c.circuits();
    const std::size_t k = rng.below(members.size());
    const SignedSet victim = -members[k];
    members.erase(std::find(members.begin(), members.end(), victim));
    const AxiomReport d = validate_circuit_axioms(CircuitSet(c.ground_size(), members));
    o.require(!d.passed && d.axiom == "C1", "dropped negation not caught");
    ++dropped;
    // Add a proper superset of a member together with its negation.
    const SignedSet& x = c.circuits()[k];
    const auto supp = x.support();
    if (supp.size() == c.ground_size()) continue;
    std::size_t extra = 0;
    while (std::find(supp.begin(), supp.end(), extra) != supp.end()) ++extra;
    std::vector<std::size_t> pos = x.positive();
    pos.push_back(extra);
    std::sort(pos.begin(), pos.end());
    const SignedSet y(c.ground_size(), pos, x.negative());
    std::vector<SignedSet> grown = c.circuits();
    if (std::find(grown.begin(), grown.end(), y) != grown.end()) continue;
    grown.push_back(y);
    grown.push_back(-y);
    const AxiomReport s = validate_circuit_axioms(CircuitSet(c.ground_size(), grown));
    o.require(!s.passed && s.axiom == "C2", "superset circuit not caught");
    ++supersets;
  }
  o.require(corpus.size() >= 100, "corpus too small");
  o.require(dropped > 0 && supersets > 0, "no mutations exercised");
  if (o.ok)
    o.detail = std::to_string(corpus.size()) + " sets (" + std::to_string(nonempty) + " nonempty), " +
               std::to_string(dropped) + " + " + std::to_string(supersets) + " mutations caught";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"circuit enumeration of the six-column example and D3", criterion1},
      {"graph dimension theorems on a random connected corpus", criterion2},
      {"B3+ primal and dual dimension 9", criterion3},
      {"bridge suspension and loop bouquet cross-polytope", criterion4},
      {"K4 minus an edge cocircuit polytope", criterion5},
      {"family closed forms against the generic engine", criterion6},
      {"zonotope, cycle zonotope and polar dual identifications", criterion7},
      {"equivariant table of S4", criterion8},
      {"(24)-fixed hexagon versus quadrilateral", criterion9},
      {"circuit axiom validator and mutations", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failures;
    std::printf("%s %2zu  %s  [%s]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
