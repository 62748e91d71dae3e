#include "matrix.hpp"

#include <algorithm>
#include <utility>

#include "errors.hpp"

namespace omc {

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::select_columns(std::span<const std::size_t> cols) const {
  RatMatrix s(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) s(r, k) = (*this)(r, cols[k]);
  return s;
}

RatVector RatMatrix::apply(const RatVector& x) const {
  if (x.size() != cols_) throw DomainError("matrix-vector size mismatch");
  RatVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero() && !x[c].is_zero()) y[r] += a * x[c];
    }
  }
  return y;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product size mismatch");
  RatMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference size mismatch");
  RatMatrix d(a);
  for (std::size_t i = 0; i < d.data_.size(); ++i) d.data_[i] -= b.data_[i];
  return d;
}

std::vector<std::size_t> Echelon::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

namespace {

using IntRows = std::vector<std::vector<BigInt>>;

// Rows scaled by the lcm of their denominators; row space and kernel are unchanged.
IntRows integer_rows(const RatMatrix& m, BigInt* scale = nullptr) {
  IntRows rows(m.rows(), std::vector<BigInt>(m.cols()));
  if (scale) *scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, m(r, c).denominator());
    for (std::size_t c = 0; c < m.cols(); ++c)
      rows[r][c] = m(r, c).numerator() * (l / m(r, c).denominator());
    if (scale) *scale *= l;
  }
  return rows;
}

struct BareissResult {
  IntRows rows;                      // echelon form, pivot rows first
  std::vector<std::size_t> pivots;   // pivot column per leading row
  int swap_sign = 1;
};

BareissResult bareiss(IntRows a, std::size_t cols) {
  BareissResult out;
  const std::size_t nrows = a.size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a[p][c] == 0) ++p;
    if (p == nrows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      out.swap_sign = -out.swap_sign;
    }
    const BigInt& piv = a[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const BigInt f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt v = piv * a[i][j] - f * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = piv;
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = std::move(a);
  return out;
}

}  // namespace

Echelon row_reduce(const RatMatrix& m) {
  BareissResult b = bareiss(integer_rows(m), m.cols());
  Echelon e;
  e.cols = m.cols();
  e.pivots = b.pivots;
  const std::size_t r = b.pivots.size();
  e.rows.assign(r, RatVector(m.cols()));
  for (std::size_t k = 0; k < r; ++k) {
    const BigInt& lead = b.rows[k][b.pivots[k]];
    for (std::size_t c = 0; c < m.cols(); ++c) e.rows[k][c] = Rational(b.rows[k][c], lead);
  }
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t pc = e.pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      const Rational f = e.rows[i][pc];
      if (f.is_zero()) continue;
      for (std::size_t c = pc; c < m.cols(); ++c) {
        if (!e.rows[k][c].is_zero()) e.rows[i][c] -= f * e.rows[k][c];
      }
    }
  }
  return e;
}

std::size_t rank(const RatMatrix& m) {
  return bareiss(integer_rows(m), m.cols()).pivots.size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<RatVector> basis;
  for (std::size_t f : e.free_columns()) {
    RatVector x(m.cols());
    x[f] = 1;
    for (std::size_t k = 0; k < e.rank(); ++k) x[e.pivots[k]] = -e.rows[k][f];
    basis.push_back(primitive(x));
  }
  return basis;
}

std::optional<RatVector> solve_in_rowspace(const RatMatrix& m,
                                           std::span<const std::size_t> zero_on) {
  const Echelon e = row_reduce(m);
  const std::size_t r = e.rank();
  if (r == 0) return std::nullopt;
  // Coefficients c with sum_k c_k rows[k][j] = 0 for every j in zero_on.
  RatMatrix constraints(zero_on.size(), r);
  for (std::size_t a = 0; a < zero_on.size(); ++a) {
    if (zero_on[a] >= m.cols()) throw DomainError("zero_on index out of range");
    for (std::size_t k = 0; k < r; ++k) constraints(a, k) = e.rows[k][zero_on[a]];
  }
  std::vector<RatVector> coeffs;
  if (zero_on.empty()) {
    RatVector c(r);
    c[0] = 1;
    coeffs.push_back(c);
  } else {
    coeffs = kernel_basis(constraints);
  }
  if (coeffs.empty()) return std::nullopt;
  RatVector u(m.cols());
  for (std::size_t k = 0; k < r; ++k) {
    if (coeffs.front()[k].is_zero()) continue;
    u = u + coeffs.front()[k] * e.rows[k];
  }
  return primitive(u);
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return Rational(1);
  BigInt scale;
  BareissResult b = bareiss(integer_rows(m, &scale), m.cols());
  if (b.pivots.size() < m.rows()) return Rational(0);
  const BigInt& last = b.rows[m.rows() - 1][m.cols() - 1];
  return Rational(BigInt(last * b.swap_sign), scale);
}

std::optional<RatVector> solve_square(const RatMatrix& a, const RatVector& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw DomainError("solve_square size mismatch");
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const Echelon e = row_reduce(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatVector x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = e.rows[k][n];
  return x;
}

}  // namespace omc
