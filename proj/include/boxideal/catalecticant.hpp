#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace boxideal {

using Exponent3 = std::array<int, 3>;

/// Exponent vectors of all degree-d monomials in w1,w2,w3, in lex order
/// with w1 > w2 > w3: w1^d, w1^(d-1) w2, ..., w3^d.
std::vector<Exponent3> monomials3(int degree);

/// 1-based position of `alpha` in monomials3(|alpha|).
std::size_t monomial3_index(const Exponent3& alpha);

/// The pattern of Cat(1, n-1; 3): rows w1,w2,w3, columns the degree-(n-1)
/// monomials w^beta in lex order, and entry (j,k) the 1-based index l such
/// that z_l = w_j * w^beta_k in the lex list of degree-n monomials.
struct CatalecticantPattern {
  int n = 1;
  std::size_t rows = 3;
  std::size_t cols = 1;
  std::vector<std::size_t> entries;  // row-major, 1-based z indices

  std::size_t at(std::size_t row, std::size_t col) const { return entries[row * cols + col]; }
};

CatalecticantPattern catalecticant(int n);

} // namespace boxideal
