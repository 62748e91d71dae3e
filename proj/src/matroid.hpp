#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace omc {

/// A pair of disjoint index sets (X+, X-) over the ground set {0, ..., m-1}.
class SignedSet {
 public:
  SignedSet() = default;
  SignedSet(std::size_t ground_size, std::vector<std::size_t> positive,
            std::vector<std::size_t> negative);

  /// From a sign vector with entries in {-1, 0, 1}.
  static SignedSet from_signs(const std::vector<int>& signs);
  /// From "(+,-,0)" style text.
  static SignedSet parse(const std::string& text);

  std::size_t ground_size() const { return ground_; }
  const std::vector<std::size_t>& positive() const { return pos_; }
  const std::vector<std::size_t>& negative() const { return neg_; }
  std::vector<std::size_t> support() const;
  bool empty() const { return pos_.empty() && neg_.empty(); }
  int sign_at(std::size_t e) const;
  std::vector<int> signs() const;

  SignedSet operator-() const { return SignedSet(ground_, neg_, pos_); }

  /// True if the smallest support element is positive.
  bool is_canonical() const;
  SignedSet canonical() const { return is_canonical() ? *this : -*this; }

  /// Signed incidence vector: +1 on X+, -1 on X-, 0 elsewhere.
  RatVector incidence_vector() const;

  /// "(+,-,0,+)".
  std::string sign_string() const;
  /// "(134|2)" with 1-based elements; elements are comma separated once the
  /// ground set has more than 9 elements.
  std::string set_string() const;

  friend bool operator==(const SignedSet&, const SignedSet&) = default;
  friend std::strong_ordering operator<=>(const SignedSet& a, const SignedSet& b);

 private:
  std::size_t ground_ = 0;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> neg_;
};

/// Deduplicated family of signed sets over a common ground set. Ordered by
/// support size, then support, with each canonical member directly followed
/// by its opposite. The constructor does not enforce the circuit axioms;
/// use validate_circuit_axioms.
class CircuitSet {
 public:
  CircuitSet() = default;
  CircuitSet(std::size_t ground_size, std::vector<SignedSet> members);

  std::size_t ground_size() const { return ground_; }
  const std::vector<SignedSet>& circuits() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(const SignedSet& x) const;

  friend bool operator==(const CircuitSet&, const CircuitSet&) = default;

 private:
  std::size_t ground_ = 0;
  std::vector<SignedSet> items_;
};

/// Directed multigraph; loops and parallel edges allowed. Edge order fixes
/// the coordinate order of the ground set. Nodes are 0-based.
struct Digraph {
  std::size_t node_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  Digraph() = default;
  Digraph(std::size_t nodes, std::vector<std::pair<std::size_t, std::size_t>> edge_list);

  /// Complete graph with edges (i,j), i<j, in lexicographic order.
  static Digraph complete(std::size_t n);
  /// Cycle 1-2-...-n-1 with edges (i,i+1) and (n,1).
  static Digraph cycle(std::size_t n);

  /// Rows are nodes, columns edges; column of (t,h) is e_t - e_h.
  RatMatrix incidence_matrix() const;
  Digraph without_edge(std::size_t e) const;
  /// Node sets of the connected components, each sorted, ordered by minimum.
  std::vector<std::vector<std::size_t>> components() const;
  /// Edges whose removal increases the number of components.
  std::vector<std::size_t> bridges() const;
};

struct AxiomReport {
  bool passed = true;
  std::string axiom;    // "C0".."C3" on failure
  std::string witness;  // human-readable description of the violation
};

/// Checks (C0) no empty set, (C1) closure under negation, (C2) no support
/// containment except X = +-Y, and (C3) weak elimination, exhaustively.
AxiomReport validate_circuit_axioms(const CircuitSet& c);

CircuitSet circuits_from_matrix(const RatMatrix& m);
CircuitSet cocircuits_from_matrix(const RatMatrix& m);
CircuitSet circuits_from_digraph(const Digraph& g);
CircuitSet cocircuits_from_digraph(const Digraph& g);

/// Reverses the sign of every element of `flip` in every member.
CircuitSet reorient(const CircuitSet& c, const std::vector<std::size_t>& flip);
/// Disjoint union on ground set m1 + m2, second block shifted by m1.
CircuitSet direct_sum(const CircuitSet& a, const CircuitSet& b);

}  // namespace omc
