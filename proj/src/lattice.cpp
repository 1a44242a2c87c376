#include "toricwidth/lattice.hpp"

#include <algorithm>
#include <utility>

#include "toricwidth/error.hpp"

namespace toric {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Quotient rounded toward zero; keeps remainders smaller than the divisor in
// absolute value, which is all the reductions below need.
Integer trunc_div(const Integer& a, const Integer& b) { return a / b; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

using RatMatrix = std::vector<RatVector>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw ToricError(ErrorCode::ShapeMismatch, "entry count does not match rows*cols");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ToricError(ErrorCode::ShapeMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw ToricError(ErrorCode::ShapeMismatch, "ragged matrix columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  std::vector<IntVector> converted;
  for (const auto& r : rows) converted.push_back(to_int_vector(std::vector<long long>(r)));
  return from_rows(converted, cols);
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw ToricError(ErrorCode::ShapeMismatch, "matrix-vector shape mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw ToricError(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

std::vector<Integer> SNFDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    if (S(i, i) != 0) out.push_back(S(i, i));
  return out;
}

std::size_t SNFDecomposition::rank() const { return invariant_factors().size(); }

SNFDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SNFDecomposition d{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& S = d.S;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (S(i, j) != 0 && (!found || abs_value(S(i, j)) < best)) {
          found = true;
          best = abs_value(S(i, j));
          pr = i;
          pc = j;
        }
    if (!found) break;
    S.swap_rows(t, pr);
    d.U.swap_rows(t, pr);
    S.swap_cols(t, pc);
    d.V.swap_cols(t, pc);

    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i) {
        const Integer q = trunc_div(S(i, t), S(t, t));
        S.add_row_multiple(i, t, -q);
        d.U.add_row_multiple(i, t, -q);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        const Integer q = trunc_div(S(t, j), S(t, t));
        S.add_col_multiple(j, t, -q);
        d.V.add_col_multiple(j, t, -q);
      }

      // A leftover remainder in the pivot row/column is smaller than the pivot.
      bool moved = false;
      for (std::size_t i = t + 1; i < m && !moved; ++i)
        if (S(i, t) != 0) {
          S.swap_rows(t, i);
          d.U.swap_rows(t, i);
          moved = true;
        }
      for (std::size_t j = t + 1; j < n && !moved; ++j)
        if (S(t, j) != 0) {
          S.swap_cols(t, j);
          d.V.swap_cols(t, j);
          moved = true;
        }
      if (moved) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool folded = false;
      for (std::size_t i = t + 1; i < m && !folded; ++i)
        for (std::size_t j = t + 1; j < n && !folded; ++j)
          if (S(i, j) % S(t, t) != 0) {
            S.add_row_multiple(t, i, 1);
            d.U.add_row_multiple(t, i, 1);
            folded = true;
          }
      if (!folded) break;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      d.U.negate_row(t);
    }
  }
  return d;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid on column c over rows r..m-1.
    for (;;) {
      std::size_t p = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (p == m || abs_value(h(i, c)) < abs_value(h(p, c)))) p = i;
      if (p == m) break;
      h.swap_rows(r, p);
      bool reduced = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        h.add_row_multiple(i, r, -trunc_div(h(i, c), h(r, c)));
        reduced = reduced || h(i, c) != 0;
      }
      if (!reduced) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) h.add_row_multiple(i, r, -floor_div(h(i, c), h(r, c)));
    ++r;
  }
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < r; ++i) rows.push_back(h.row(i));
  return IntMatrix::from_rows(rows, n);
}

std::vector<IntVector> kernel_basis(const IntMatrix& a) {
  const SNFDecomposition d = smith_normal_form(a);
  const std::size_t r = d.rank();
  std::vector<IntVector> raw;
  for (std::size_t j = r; j < a.cols(); ++j) raw.push_back(d.V.column(j));
  if (raw.empty()) return {};
  const IntMatrix h = hermite_normal_form(IntMatrix::from_rows(raw, a.cols()));
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < h.rows(); ++i) out.push_back(h.row(i));
  return out;
}

std::size_t rank(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  RatMatrix m(a.rows(), RatVector(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return rref(m, a.cols()).size();
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw ToricError(ErrorCode::ShapeMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw ToricError(ErrorCode::ShapeMismatch, "inverse of non-square matrix");
  const Integer det = determinant(a);
  if (det != 1 && det != -1) throw ToricError(ErrorCode::ShapeMismatch, "matrix is not unimodular");
  RatMatrix m(n, RatVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  rref(m, n);
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = boost::multiprecision::numerator(m[i][n + j]);
  return inv;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs_value(x));
  return g;
}

bool is_primitive(const IntVector& v) {
  const Integer g = content(v);
  if (g == 0) throw ToricError(ErrorCode::ZeroVector, "primitivity of the zero vector is undefined");
  return g == 1;
}

std::optional<RatVector> solve_exact(const IntMatrix& a, const RatVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw ToricError(ErrorCode::ShapeMismatch, "right-hand side length mismatch");
  RatMatrix aug(m, RatVector(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n] = b[i];
  }
  const auto pivots = rref(aug, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // inconsistent
  if (pivots.size() != n) return std::nullopt;                     // not full column rank
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = aug[i][n];
  return x;
}

}  // namespace toric
