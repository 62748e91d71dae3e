#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rational.hpp"

namespace omc {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols = 0);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  RatMatrix transpose() const;
  RatMatrix select_columns(std::span<const std::size_t> cols) const;

  RatVector apply(const RatVector& x) const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form: `rows` holds the nonzero rows (pivot entries 1),
/// `pivots[k]` is the pivot column of row k.
struct Echelon {
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;

  std::size_t rank() const { return pivots.size(); }
  /// Columns without a pivot, ascending.
  std::vector<std::size_t> free_columns() const;
};

/// Fraction-free (Bareiss) elimination followed by back substitution.
Echelon row_reduce(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of {x : m x = 0}; each vector primitive integral with positive
/// leading entry, one per free column in ascending order.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// A nonzero vector of the row space of m vanishing on every column of
/// `zero_on`, normalized like kernel_basis; nullopt if only 0 qualifies.
std::optional<RatVector> solve_in_rowspace(const RatMatrix& m,
                                           std::span<const std::size_t> zero_on);

Rational determinant(const RatMatrix& m);

/// Solution of the square system a x = b, nullopt when a is singular.
std::optional<RatVector> solve_square(const RatMatrix& a, const RatVector& b);

}  // namespace omc
