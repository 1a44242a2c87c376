#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "toricwidth/numbers.hpp"

namespace toric {

/// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Integer>& entries() const { return data_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;

  IntVector operator*(const IntVector& v) const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * A * V == S with U, V unimodular and S diagonal, d_i | d_{i+1}, d_i >= 0.
struct SNFDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  std::vector<Integer> invariant_factors() const;  // nonzero diagonal entries
  std::size_t rank() const;
};

SNFDecomposition smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form of the lattice spanned by the rows of `a`.
/// Zero rows are dropped; pivots are positive and entries above a pivot lie
/// in [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Basis of the saturated kernel {v in Z^cols : A v = 0}, in Hermite normal form.
std::vector<IntVector> kernel_basis(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);
Integer determinant(const IntMatrix& a);

/// Throws ToricError(ShapeMismatch) when `a` is not square with det = +-1.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// True iff gcd of the entries is 1. Throws ZeroVector on the zero vector.
bool is_primitive(const IntVector& v);
Integer content(const IntVector& v);  // gcd of entries, 0 for the zero vector

/// Unique rational solution of A x = b when A has full column rank and the
/// system is consistent, std::nullopt otherwise.
std::optional<RatVector> solve_exact(const IntMatrix& a, const RatVector& b);

}  // namespace toric
