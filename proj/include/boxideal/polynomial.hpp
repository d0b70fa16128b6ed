#pragma once

#include "boxideal/monomial.hpp"
#include "boxideal/monomial_order.hpp"
#include "boxideal/var_table.hpp"

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boxideal {

using Rational = mpq_class;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A variable table paired with a monomial order. Polynomials hold a shared
/// pointer to their ring; operands from structurally different rings are
/// rejected.
class Ring {
public:
  Ring(VarTable vars, MonomialOrder order);
  static RingPtr make(VarTable vars, MonomialOrder order);

  const VarTable& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return vars_.size(); }

  /// Order comparison with a range check on both monomials.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  std::string format(const Monomial& m) const;

  bool operator==(const Ring& other) const {
    return order_ == other.order_ && vars_ == other.vars_;
  }

private:
  VarTable vars_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what);

struct Term {
  Rational coeff;
  Monomial mono;
};

/// Sparse polynomial with rational coefficients. Terms are kept strictly
/// descending under the ring's order with no zero coefficients; the empty
/// term list is the zero polynomial.
class Polynomial {
public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t pos);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial term(RingPtr ring, const Rational& c, Monomial m);
  /// Sorts, merges and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusts that `terms` is already canonical.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  std::uint32_t degree() const;  // -> 0 for the zero polynomial
  bool is_homogeneous() const;
  bool is_constant() const;
  bool uses_variable(std::size_t pos) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  Polynomial pow(unsigned e) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;
  /// Leading coefficient made +1 by a sign flip only.
  Polynomial sign_normalized() const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Same ring and identical term lists.
  bool operator==(const Polynomial& other) const;

  std::string to_string() const;
  static Polynomial parse(RingPtr ring, std::string_view text);

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// a + c*m*b, the fused update used by reductions.
Polynomial add_scaled(const Polynomial& a, const Rational& c, const Monomial& m, const Polynomial& b);

/// Replaces every variable of `p` with the assigned polynomial (all over
/// `target`) and expands. Throws StructuralError naming the first variable
/// of `p` that has no assignment.
Polynomial substitute(const Polynomial& p, const RingPtr& target,
                      std::span<const std::optional<Polynomial>> assignment);

/// Renames variables: source position i becomes target position var_map[i].
Polynomial remap(const Polynomial& p, const RingPtr& target, std::span<const std::size_t> var_map);

/// Re-sorts `p` into a ring with an identical variable table but a
/// different order.
Polynomial rebase(const Polynomial& p, const RingPtr& target);

} // namespace boxideal
