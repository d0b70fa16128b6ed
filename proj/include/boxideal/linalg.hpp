#pragma once

#include "boxideal/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace boxideal {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Rational> row(std::size_t r) const;

  /// Reduced row echelon form; zero rows are dropped.
  RationalMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  /// Basis of {v : A v = 0}, one vector per free column, in reduced form.
  std::vector<std::vector<Rational>> kernel() const;
  Rational determinant() const;  // square only

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  bool operator==(const RationalMatrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Determinant of a square matrix of polynomials by expansion over column
/// subsets (exact, exponential in the size; intended for small matrices).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring);

} // namespace boxideal
