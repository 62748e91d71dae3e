#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "family.hpp"

namespace omc {

/// Element of S_n in one-line notation, images 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);
  /// Cycle notation "(2 4)", "(2,4)", "(24)" (digits, n <= 9), "()" for the
  /// identity, or one-line notation "1 4 3 2".
  static Permutation parse(std::size_t n, const std::string& text);
  /// All of S_n in lexicographic one-line order.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t n() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i - 1]; }
  const std::vector<std::size_t>& images() const { return images_; }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  /// Fixed points included as 1-cycles; each cycle starts at its smallest
  /// element; cycles ordered by smallest element except that the cycle
  /// containing n comes last.
  std::vector<std::vector<std::size_t>> cycles() const;
  /// Cycle lengths, non-increasing.
  std::vector<std::size_t> cycle_type() const;
  std::string cycle_string() const;  // "(1)(3)(2 4)"
  std::string one_line() const;      // "1 4 3 2"

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// (n-1) x (n-1): entry (i,j) is 1 if sigma(j) = i, -1 if sigma(j) = n.
RatMatrix action_matrix(const Permutation& sigma);

SubsetLabel act(const Permutation& sigma, const SubsetLabel& label);

/// Orbits of the vertex labels under S_n, each sorted by mask.
std::vector<std::vector<SubsetLabel>> orbits(std::size_t n);

/// Zonotope generated by u over the support of each cycle.
VPolytope fixed_polytope(const Permutation& sigma);

/// (t+1)^k - t^k, k the number of cycles.
IntPolynomial fixed_ehrhart(const Permutation& sigma);

struct CharacterDet {
  IntPolynomial reduced;  // det(I - M_sigma z) of the (n-1)-dimensional action
  IntPolynomial full;     // (1 - z) * reduced = prod (1 - z^|cycle|)
};

/// Computed from the action matrix and checked against the cycle product.
CharacterDet character_det(const Permutation& sigma);

/// H*[z](sigma) with the series sum_t chi(t) z^t = numerator / prod (1 - z^l).
struct HStarSeries {
  Permutation sigma;
  IntPolynomial numerator;                  // H*[z](sigma)
  IntPolynomial eulerian_factor;            // A_k(z)
  std::vector<IntPolynomial> cycle_factors;  // 1 + z + ... + z^(l-1) per cycle
  std::vector<std::size_t> cycle_lengths;    // denominator factors
  IntPolynomial denominator() const;
};

/// Closed form and determinant route; throws MismatchError if they differ.
HStarSeries hstar_series(const Permutation& sigma);

/// Checks of one element against the generic engine.
struct ElementCheck {
  bool fixed_polytope_matches = false;  // closed form vs fixed_subpolytope
  bool counts_match = false;            // lattice counts vs fixed_ehrhart, t <= 3
};
ElementCheck verify_element(const Permutation& sigma);

/// One row per cycle type of S_n.
struct ClassRow {
  std::vector<std::size_t> cycle_type;
  Permutation representative;  // first in lexicographic order
  std::size_t class_size = 0;
  IntPolynomial fixed_ehrhart;
  CharacterDet det;
  HStarSeries series;
};

/// Rows ordered with the cycle types compared lexicographically. Throws
/// MismatchError if H* differs within a class.
std::vector<ClassRow> equivariant_table(std::size_t n);

}  // namespace omc
