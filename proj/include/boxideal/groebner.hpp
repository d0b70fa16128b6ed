#pragma once

#include "boxideal/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace boxideal {

/// Resource guards for Groebner computations. Exceeding any of them throws
/// BudgetExhausted.
struct GbOptions {
  std::size_t max_spairs = 2'000'000;  // S-polynomials actually reduced
  std::size_t max_terms = 500'000;     // terms in any intermediate polynomial
  /// Homogeneous input only: ignore S-pairs whose lcm degree exceeds this,
  /// giving a basis that is correct up to this degree.
  std::optional<std::uint32_t> degree_limit;
};

struct GbStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t coprime_skipped = 0;
  std::size_t chain_skipped = 0;
  std::size_t zero_reductions = 0;
  std::size_t degree_skipped = 0;
};

/// Generators over a ring, optionally flagged as the reduced Groebner basis
/// under the ring's order (monic, auto-reduced, sorted descending by
/// leading monomial).
class Ideal {
public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

  /// Wraps a reduced basis produced by this engine.
  static Ideal reduced_basis(RingPtr ring, std::vector<Polynomial> basis,
                             std::optional<std::uint32_t> truncated_at = std::nullopt);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_groebner() const { return groebner_; }
  /// Set when the basis is only complete up to a degree.
  std::optional<std::uint32_t> truncated_at() const { return truncated_at_; }
  bool is_homogeneous() const;
  bool is_zero() const { return gens_.empty(); }

private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  bool groebner_ = false;
  std::optional<std::uint32_t> truncated_at_;
};

/// Full multivariate division remainder. At each step the first divisor (in
/// the given order) whose leading monomial divides the current leading term
/// is used.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const GbOptions& options = {});

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Exact quotient f / g; throws VerificationError when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

struct GroebnerCertificate {
  std::size_t first;   // indices into the checked list
  std::size_t second;
  Polynomial remainder;
};

struct GroebnerCheck {
  bool is_groebner = true;
  std::size_t pairs_total = 0;
  std::size_t coprime_skipped = 0;
  std::size_t pairs_reduced = 0;
  std::optional<GroebnerCertificate> certificate;
};

/// Buchberger criterion: every S-polynomial reduces to zero modulo `basis`.
/// Pairs with coprime leading monomials are skipped (their S-polynomials
/// always reduce to zero). Stops at the first nonzero remainder.
GroebnerCheck check_groebner(std::span<const Polynomial> basis, const GbOptions& options = {});

/// Reduced Groebner basis via Buchberger's algorithm with the
/// Gebauer-Moeller criteria and sugar pair selection. Deterministic.
Ideal buchberger(const Ideal& ideal, const GbOptions& options = {}, GbStats* stats = nullptr);

/// Minimalizes, inter-reduces, makes monic and sorts (descending by leading
/// monomial) a Groebner basis.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis);

/// Returns `ideal` if already flagged as a Groebner basis, else computes one.
Ideal groebner(const Ideal& ideal, const GbOptions& options = {});

/// Requires a Groebner basis; throws StructuralError otherwise.
bool ideal_member(const Polynomial& f, const Ideal& basis);
/// Every generator of `other` lies in the ideal with basis `basis`.
bool contains(const Ideal& basis, const Ideal& other);
/// Equality by mutual membership.
bool same_ideal(const Ideal& a, const Ideal& b, const GbOptions& options = {});

Ideal sum(const Ideal& a, const Ideal& b);

/// I intersected with the subring on the variables not in `drop`, as a
/// reduced basis over the original ring. Uses a block elimination order.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop, const GbOptions& options = {});

/// I ∩ J via t·I + (1-t)·J and elimination of t.
Ideal intersect(const Ideal& a, const Ideal& b, const GbOptions& options = {});
Ideal intersect(std::span<const Ideal> ideals, const GbOptions& options = {});

/// (I : f) = (I ∩ <f>) / f.
Ideal colon(const Ideal& ideal, const Polynomial& f, const GbOptions& options = {});

struct Saturation {
  Ideal ideal;
  unsigned steps;  // colon steps until the ideal stopped growing
};

/// (I : f^∞) by iterated colons until stable.
Saturation saturate(const Ideal& ideal, const Polynomial& f, const GbOptions& options = {},
                    unsigned max_steps = 64);

} // namespace boxideal
