#include "boxideal/catalecticant.hpp"

#include "boxideal/errors.hpp"

#include <algorithm>

namespace boxideal {

std::vector<Exponent3> monomials3(int degree) {
  std::vector<Exponent3> out;
  if (degree < 0)
    return out;
  for (int a = degree; a >= 0; --a)
    for (int b = degree - a; b >= 0; --b)
      out.push_back({a, b, degree - a - b});
  return out;
}

std::size_t monomial3_index(const Exponent3& alpha) {
  const int degree = alpha[0] + alpha[1] + alpha[2];
  const auto list = monomials3(degree);
  auto it = std::find(list.begin(), list.end(), alpha);
  if (it == list.end())
    throw StructuralError("negative exponent in a ternary monomial");
  return static_cast<std::size_t>(it - list.begin()) + 1;
}

CatalecticantPattern catalecticant(int n) {
  if (n < 1)
    throw StructuralError("catalecticant pattern needs n >= 1");
  CatalecticantPattern pat;
  pat.n = n;
  const auto betas = monomials3(n - 1);
  pat.cols = betas.size();
  pat.entries.resize(3 * pat.cols);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < pat.cols; ++k) {
      Exponent3 alpha = betas[k];
      ++alpha[j];
      pat.entries[j * pat.cols + k] = monomial3_index(alpha);
    }
  return pat;
}

} // namespace boxideal
