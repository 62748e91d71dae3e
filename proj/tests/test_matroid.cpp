#include "doctest.h"
#include "errors.hpp"
#include "matroid.hpp"
#include "oracles.hpp"

using namespace omc;
using oracle::mat;

namespace {

// (pos|neg) with 1-based elements, for readability of expected values.
SignedSet ss(std::size_t m, std::vector<std::size_t> pos, std::vector<std::size_t> neg) {
  for (auto& e : pos) --e;
  for (auto& e : neg) --e;
  return SignedSet(m, pos, neg);
}

CircuitSet with_opposites(std::size_t m, const std::vector<SignedSet>& xs) {
  std::vector<SignedSet> all;
  for (const auto& x : xs) {
    all.push_back(x);
    all.push_back(-x);
  }
  return CircuitSet(m, all);
}

Digraph random_graph(oracle::Lcg& rng, bool allow_loops) {
  const std::size_t n = 2 + rng.below(4);
  const std::size_t m = 1 + rng.below(7);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t t = rng.below(n), h = rng.below(n);
    if (!allow_loops && t == h) h = (t + 1) % n;
    edges.emplace_back(t, h);
  }
  return Digraph(n, edges);
}

std::vector<RatVector> rows_of(const RatMatrix& m) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
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

}  // namespace

TEST_CASE("signed set basics") {
  const SignedSet x = SignedSet::parse("(+,-,0,+)");
  CHECK(x.positive() == std::vector<std::size_t>{0, 3});
  CHECK(x.negative() == std::vector<std::size_t>{1});
  CHECK(x.sign_string() == "(+,-,0,+)");
  CHECK(x.set_string() == "(14|2)");
  CHECK(x.is_canonical());
  CHECK_FALSE((-x).is_canonical());
  CHECK(x.incidence_vector() == oracle::vec({1, -1, 0, 1}));
  CHECK_THROWS_AS(SignedSet(3, {0}, {0}), DomainError);
  CHECK_THROWS_AS(SignedSet::parse("(+,x)"), ParseError);
}

TEST_CASE("circuits of the six-column example") {
  const RatMatrix m = mat({{0, -1, -1, 0, 0, 0}, {14, -1, -9, 0, 0, 0}, {1, 5, -1, 1, 0, 1}});
  const CircuitSet c = circuits_from_matrix(m);
  const CircuitSet expected = with_opposites(
      6, {ss(6, {5}, {}), ss(6, {4}, {6}), ss(6, {1, 3, 4}, {2}), ss(6, {1, 3, 6}, {2})});
  CHECK(c == expected);
  CHECK(c.size() == 8);
  CHECK(validate_circuit_axioms(c).passed);
}

TEST_CASE("circuits of the D3 root configuration") {
  const RatMatrix d3 = mat({{1, 1, 1, 1, 0, 0}, {1, -1, 0, 0, 1, 1}, {0, 0, 1, -1, 1, -1}});
  const CircuitSet c = circuits_from_matrix(d3);
  CHECK(c.size() == 14);
  CHECK(c.contains(ss(6, {1}, {3, 6})));
  CHECK(c.contains(ss(6, {3, 6}, {4, 5})));
  CHECK(oracle::sign_vectors(c) == oracle::minimal_sign_vectors(kernel_basis(d3), 6));
}

TEST_CASE("triangle circuits and cocircuits") {
  const Digraph k3 = Digraph::complete(3);
  CHECK(k3.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
  const CircuitSet c = circuits_from_digraph(k3);
  CHECK(c == with_opposites(3, {SignedSet::parse("(+,-,+)")}));
  const CircuitSet d = cocircuits_from_digraph(k3);
  CHECK(d == with_opposites(3, {SignedSet::parse("(+,+,0)"), SignedSet::parse("(+,0,-)"),
                                SignedSet::parse("(0,+,+)")}));
  CHECK(circuits_from_matrix(k3.incidence_matrix()) == c);
  CHECK(cocircuits_from_matrix(k3.incidence_matrix()) == d);
}

TEST_CASE("matrix circuits and cocircuits agree with support-by-support search") {
  oracle::Lcg rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng.below(3), c = r + rng.below(4);
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng.below(5)) - 2;
    if (trial % 4 == 0) {
      for (std::size_t i = 0; i < r; ++i) m(i, c - 1) = m(i, 0);  // parallel column
    }
    const auto ker = kernel_basis(m);
    if (!ker.empty()) {
      CHECK(oracle::sign_vectors(circuits_from_matrix(m)) == oracle::minimal_sign_vectors(ker, c));
    } else {
      CHECK(circuits_from_matrix(m).empty());
    }
    const Echelon e = row_reduce(m);
    if (e.rank() > 0) {
      CHECK(oracle::sign_vectors(cocircuits_from_matrix(m)) == oracle::minimal_sign_vectors(e.rows, c));
    }
  }
}

TEST_CASE("graph constructors agree with the incidence matrix") {
  oracle::Lcg rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph g = random_graph(rng, true);
    const RatMatrix inc = g.incidence_matrix();
    const CircuitSet c = circuits_from_digraph(g);
    const CircuitSet d = cocircuits_from_digraph(g);
    CHECK(c == circuits_from_matrix(inc));
    CHECK(d == cocircuits_from_matrix(inc));
    CHECK(validate_circuit_axioms(c).passed);
    CHECK(validate_circuit_axioms(d).passed);
    for (const auto& x : c.circuits())
      for (const auto& y : d.circuits()) CHECK(orthogonal(x, y));
  }
}

TEST_CASE("loops and bridges") {
  // node 0 carries a loop; edge 1 (0->1) is a bridge; 1-2-3 is a triangle
  const Digraph g(4, {{0, 0}, {0, 1}, {1, 2}, {2, 3}, {1, 3}});
  CHECK(g.bridges() == std::vector<std::size_t>{1});
  const CircuitSet c = circuits_from_digraph(g);
  CHECK(c.contains(ss(5, {1}, {})));
  for (const auto& x : c.circuits()) CHECK(x.sign_at(1) == 0);
  const CircuitSet d = cocircuits_from_digraph(g);
  CHECK(d.contains(ss(5, {2}, {})));
  for (const auto& x : d.circuits()) CHECK(x.sign_at(0) == 0);
}

TEST_CASE("axiom validator catches mutations") {
  const CircuitSet c = circuits_from_digraph(Digraph::complete(4));
  REQUIRE(validate_circuit_axioms(c).passed);

  std::vector<SignedSet> dropped(c.circuits().begin() + 1, c.circuits().end());
  const AxiomReport r1 = validate_circuit_axioms(CircuitSet(6, dropped));
  CHECK_FALSE(r1.passed);
  CHECK(r1.axiom == "C1");

  std::vector<SignedSet> grown = c.circuits();
  const SignedSet base = c.circuits().front();
  std::vector<std::size_t> pos = base.positive(), neg = base.negative();
  for (std::size_t e = 0; e < 6; ++e) {
    if (base.sign_at(e) == 0) {
      pos.push_back(e);
      break;
    }
  }
  std::sort(pos.begin(), pos.end());
  const SignedSet bigger(6, pos, neg);
  grown.push_back(bigger);
  grown.push_back(-bigger);
  const AxiomReport r2 = validate_circuit_axioms(CircuitSet(6, grown));
  CHECK_FALSE(r2.passed);
  CHECK(r2.axiom == "C2");

  const AxiomReport r3 = validate_circuit_axioms(
      with_opposites(3, {SignedSet::parse("(+,+,0)"), SignedSet::parse("(-,0,+)")}));
  CHECK_FALSE(r3.passed);
  CHECK(r3.axiom == "C3");

  const AxiomReport r0 = validate_circuit_axioms(CircuitSet(2, {SignedSet(2, {}, {})}));
  CHECK_FALSE(r0.passed);
  CHECK(r0.axiom == "C0");
}

TEST_CASE("reorientation and direct sums") {
  const CircuitSet c = circuits_from_digraph(Digraph::complete(3));
  const CircuitSet r = reorient(c, {1});
  CHECK(r == with_opposites(3, {SignedSet::parse("(+,+,+)")}));
  CHECK(validate_circuit_axioms(r).passed);
  const CircuitSet s = direct_sum(c, c);
  CHECK(s.ground_size() == 6);
  CHECK(s.size() == 4);
  CHECK(validate_circuit_axioms(s).passed);
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(circuits_from_matrix(RatMatrix(1, 25)), GuardError);
  CHECK_THROWS_AS(Digraph(2, {{0, 2}}), DomainError);
}
