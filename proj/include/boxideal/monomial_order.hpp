#pragma once

#include "boxideal/monomial.hpp"

#include <compare>
#include <cstddef>
#include <string>

namespace boxideal {

enum class OrderKind { lex, degrevlex, block };

/// Whether table position 0 is the largest variable (the usual convention,
/// w1 > w2 > w3) or the smallest one (box variables, where x[1,...,1] is the
/// least variable and larger index tuples are larger variables).
enum class VariableRank { first_largest, first_smallest };

/// A multiplicative total well-order on monomials.
///
/// `block(k, inner)` is an elimination order: the first k table positions
/// form a block compared first (by `inner`), the remaining positions break
/// ties (by `inner`). Every monomial containing a block variable is larger
/// than every monomial free of them.
class MonomialOrder {
public:
  static MonomialOrder lex(VariableRank rank = VariableRank::first_largest);
  static MonomialOrder degrevlex(VariableRank rank = VariableRank::first_largest);
  static MonomialOrder block(std::size_t eliminated, OrderKind inner = OrderKind::degrevlex,
                             VariableRank rank = VariableRank::first_largest);

  OrderKind kind() const { return kind_; }
  OrderKind inner() const { return inner_; }
  VariableRank rank() const { return rank_; }
  std::size_t block_size() const { return block_; }
  /// True when degree is compared first on the whole monomial.
  bool is_graded() const { return kind_ == OrderKind::degrevlex; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// Compact descriptor such as `degrevlex/first_smallest` or
  /// `block(2,degrevlex)/first_largest`; parse() inverts it.
  std::string describe() const;
  static MonomialOrder parse(const std::string& descriptor);

  bool operator==(const MonomialOrder&) const = default;

private:
  MonomialOrder(OrderKind kind, OrderKind inner, VariableRank rank, std::size_t block)
      : kind_(kind), inner_(inner), rank_(rank), block_(block) {}

  OrderKind kind_;
  OrderKind inner_;
  VariableRank rank_;
  std::size_t block_;
};

} // namespace boxideal
