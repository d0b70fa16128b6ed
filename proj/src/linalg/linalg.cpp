#include "boxideal/linalg.hpp"

#include "boxideal/errors.hpp"

#include <unordered_map>

namespace boxideal {

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw StructuralError("from_rows: ragged row");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::rref(std::vector<std::size_t>* pivots) const {
  RationalMatrix a = *this;
  std::vector<std::size_t> piv;
  std::size_t lead_row = 0;
  Rational f;
  for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
    std::size_t p = lead_row;
    while (p < rows_ && a(p, c) == 0)
      ++p;
    if (p == rows_)
      continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < cols_; ++k)
        std::swap(a(p, k), a(lead_row, k));
    Rational inv = 1 / a(lead_row, c);
    for (std::size_t k = c; k < cols_; ++k)
      a(lead_row, k) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead_row || a(r, c) == 0)
        continue;
      f = a(r, c);
      for (std::size_t k = c; k < cols_; ++k)
        if (a(lead_row, k) != 0)
          a(r, k) -= f * a(lead_row, k);
    }
    piv.push_back(c);
    ++lead_row;
  }
  RationalMatrix out(lead_row, cols_);
  for (std::size_t r = 0; r < lead_row; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out(r, c) = a(r, c);
  if (pivots)
    *pivots = std::move(piv);
  return out;
}

std::size_t RationalMatrix::rank() const { return rref().rows(); }

std::vector<std::vector<Rational>> RationalMatrix::kernel() const {
  std::vector<std::size_t> piv;
  RationalMatrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv)
    is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      v[piv[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_)
    throw StructuralError("determinant of a non-square matrix");
  RationalMatrix a = *this;
  Rational det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && a(p, c) == 0)
      ++p;
    if (p == rows_)
      return 0;
    if (p != c) {
      for (std::size_t k = 0; k < cols_; ++k)
        std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < rows_; ++r) {
      if (a(r, c) == 0)
        continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < cols_; ++k)
        a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      throw StructuralError("polynomial determinant of a non-square matrix");
  if (n == 0)
    return Polynomial::constant(ring, 1);
  if (n > 20)
    throw StructuralError("polynomial determinant limited to 20x20");
  // det over rows k..n-1 using the column set `cols`, expanding row k.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  auto minor = [&](auto&& self, std::size_t k, std::uint32_t cols) -> Polynomial {
    if (k == n)
      return Polynomial::constant(ring, 1);
    if (auto it = memo.find(cols); it != memo.end())
      return it->second;
    Polynomial acc(ring);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1u << c)))
        continue;
      if (!m[k][c].is_zero()) {
        Polynomial sub = self(self, k + 1, cols & ~(1u << c));
        Polynomial prod = m[k][c] * sub;
        acc = sign > 0 ? acc + prod : acc - prod;
      }
      sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return minor(minor, 0, (n == 32 ? ~0u : ((1u << n) - 1)));
}

} // namespace boxideal
