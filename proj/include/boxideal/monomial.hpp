#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace boxideal {

struct VarPower {
  std::uint32_t var;
  std::uint32_t exp;
  bool operator==(const VarPower&) const = default;
};

/// Sparse power product. Stores (variable, exponent) pairs sorted by
/// variable with no zero exponents, the total degree, and a 64-bit support
/// mask used to reject divisibility tests quickly.
class Monomial {
public:
  Monomial() = default;

  static Monomial variable(std::size_t var, std::uint32_t exp = 1);
  static Monomial from_powers(std::vector<VarPower> powers);  // any order; merges repeats
  static Monomial from_dense(std::span<const std::uint32_t> exponents);

  std::uint32_t degree() const { return degree_; }
  std::uint64_t mask() const { return mask_; }
  bool is_one() const { return powers_.empty(); }
  std::span<const VarPower> powers() const { return {powers_.data(), powers_.size()}; }
  std::uint32_t exponent(std::size_t var) const;
  /// One past the largest variable index used, 0 for the unit monomial.
  std::size_t span_end() const { return powers_.empty() ? 0 : powers_.back().var + 1; }

  bool divides(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const {
    return degree_ == other.degree_ && powers_ == other.powers_;
  }

  std::size_t hash() const;

private:
  void finish();

  boost::container::small_vector<VarPower, 4> powers_;
  std::uint32_t degree_ = 0;
  std::uint64_t mask_ = 0;
};

} // namespace boxideal

template <>
struct std::hash<boxideal::Monomial> {
  std::size_t operator()(const boxideal::Monomial& m) const noexcept { return m.hash(); }
};
