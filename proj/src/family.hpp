#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polytope.hpp"

namespace omc {

/// Largest n accepted by the closed-form layer.
constexpr std::size_t kMaxFamilyN = 8;

/// A subset I of [n] with 0 < |I| < n; bit i-1 of `mask` marks element i.
struct SubsetLabel {
  std::size_t n = 0;
  std::uint32_t mask = 0;

  SubsetLabel() = default;
  SubsetLabel(std::size_t n, std::uint32_t mask);
  static SubsetLabel from_elements(std::size_t n, const std::vector<std::size_t>& elements);

  std::vector<std::size_t> elements() const;  // 1-based, ascending
  bool contains(std::size_t i) const { return (mask >> (i - 1)) & 1u; }
  std::string to_string() const;              // "{1,3}"
  friend bool operator==(const SubsetLabel&, const SubsetLabel&) = default;
};

/// A pair S subset-of T with S nonempty and T proper; labels the face
/// with vertices {u_J : S <= J <= T}.
struct FaceLabel {
  std::size_t n = 0;
  std::uint32_t s = 0;
  std::uint32_t t = 0;

  FaceLabel() = default;
  FaceLabel(std::size_t n, std::uint32_t s, std::uint32_t t);

  std::size_t dim() const;
  std::string to_string() const;  // "({1},{1,2})"
  friend bool operator==(const FaceLabel&, const FaceLabel&) = default;
};

/// All labels, by increasing mask. Vertex i of build_family_polytope(n) is label i.
std::vector<SubsetLabel> subset_labels(std::size_t n);

/// Cut vector in R^C(n,2), coordinates x_ij in lexicographic order.
RatVector vertex_u_hat(const SubsetLabel& label);

/// (n-1) x C(n,2) matrix keeping the coordinates x_in.
RatMatrix pi_matrix(std::size_t n);
RatVector project_pi(std::size_t n, const RatVector& v);

/// u_i = e_i for i < n, u_n = -(1,...,1).
RatVector u_generator(std::size_t n, std::size_t i);
/// u_I = sum of u_i over i in I.
RatVector vertex_u(const SubsetLabel& label);

/// Projected polytope in R^(n-1), or the cut polytope of K_n in R^C(n,2).
VPolytope build_family_polytope(std::size_t n, bool embedded = false);

/// x_ij - x_in + x_jn = 0 for 1 <= i < j <= n-1.
std::vector<LinearConstraint> affine_hull_equations(std::size_t n);

/// x -> (1 - x_1, x_1 - x_2 + 1, ..., x_{n-1} + 1).
RatVector phi_to_graphic_zonotope(const RatVector& x);

/// Proper face labels ordered by dimension, then S, then T.
std::vector<FaceLabel> face_labels(std::size_t n);
/// Vertex indices refer to build_family_polytope(n).
FaceRecord face_from_label(const FaceLabel& label);
/// (S1,T1) <= (S2,T2) iff T1 <= T2 and S2 <= S1.
bool face_precedes(const FaceLabel& a, const FaceLabel& b);

/// Proper faces of build_family_polytope(n) as labels, with the strict order.
struct FacePoset {
  std::vector<FaceLabel> elements;
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (a, b) with a < b strictly
};
FacePoset face_lattice_poset(std::size_t n);

/// Flat of the cycle C_n and orientation of the contraction attached to a face.
struct FlatOrientation {
  std::vector<std::size_t> flat;           // edge indices j (edge {v_j, v_j+1}), 1-based
  std::vector<std::size_t> counterclockwise;
  std::vector<std::size_t> clockwise;
};
FlatOrientation flat_orientation(const FaceLabel& label);
FaceLabel face_label_from(std::size_t n, const FlatOrientation& fo);

/// Image face in the graphic zonotope of C_n: sum over T\S of [e_j, e_j+1],
/// plus e_j+1 for j in S and e_j for j outside T.
VPolytope graphic_face(const FaceLabel& label);

IntPolynomial f_polynomial(std::size_t n);
/// Descent generating polynomial of S_k.
IntPolynomial eulerian_polynomial(std::size_t k);
/// (t+1)^n - t^n.
IntPolynomial family_ehrhart(std::size_t n);

/// conv{+-(e_i - e_j)} over K_n, in the hyperplane sum x = 0 with the last
/// coordinate dropped.
VPolytope sep_complete_graph(std::size_t n);

}  // namespace omc
