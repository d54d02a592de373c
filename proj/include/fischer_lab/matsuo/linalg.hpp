#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "fischer_lab/matsuo/rational.hpp"

namespace fischer_lab::linalg {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Integer row echelon form from fraction-free (Bareiss) elimination.
/// Rows are first cleared of denominators; pivots are taken in the first
/// column holding a nonzero entry at or below the current row.
struct IntegerEchelon {
  std::vector<std::vector<mpz_class>> rows;  // rank() nonzero rows, echelon form
  std::vector<std::size_t> pivot_columns;
  std::size_t cols = 0;

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

IntegerEchelon fraction_free_echelon(const RationalMatrix& m);

/// Rank by Gaussian elimination over Q; rows and entries that are already
/// zero are skipped, so sparse inputs stay cheap.
std::size_t rank(const RationalMatrix& m);

/// Reduced row echelon basis of the row space; pivot = first nonzero entry,
/// scaled to 1.
std::vector<std::vector<Rational>> reduced_row_basis(std::vector<std::vector<Rational>> rows);

/// Basis of {x : m x = 0}. Computed from the fraction-free echelon form,
/// then put in reduced row echelon form and scaled to primitive integer
/// rows with a positive pivot.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Leading principal minors det(m[0..k, 0..k]) for k = 1, 2, ..., stopping
/// after the first zero minor.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

/// Sylvester's criterion on a symmetric matrix.
bool is_positive_definite(const RationalMatrix& m);

std::vector<Rational> multiply(const RationalMatrix& m, std::span<const Rational> x);

}  // namespace fischer_lab::linalg
