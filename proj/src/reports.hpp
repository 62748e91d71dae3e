#pragma once

#include <optional>
#include <string>

#include "io.hpp"

namespace omc {

/// A JSON report plus the conjunction of its checks.
struct Report {
  Json json;
  bool passed = true;

  void check(const std::string& name, bool ok, Json detail = nullptr);
};

enum class InputKind { Auto, Matrix, Digraph, Polytope };

struct Input {
  InputKind kind = InputKind::Auto;
  RatMatrix matrix;
  Digraph graph;
  std::optional<VPolytope> polytope;
  Json echo;  // canonical form of the input, embedded in reports
};

/// Auto: a JSON array is a matrix, a JSON object with "edges" a digraph,
/// with "vertices" a polytope; anything else is read as CSV.
Input parse_input(const std::string& text, InputKind kind);

CircuitSet circuits_of(const Input& in, bool dual);

Report circuits_report(const Input& in, bool dual, bool verify);
Report polytope_report(const Input& in, bool dual, const std::string& what, unsigned t, bool verify,
                       std::size_t max_face_dim);
Report family_report(std::size_t n, const std::string& what, bool verify, std::size_t max_face_dim);
/// Table of S_n when sigma is empty.
Report equivariant_report(std::size_t n, const std::optional<std::string>& sigma, bool verify);
Report reproduce_report(const std::string& fixture_dir);

}  // namespace omc
