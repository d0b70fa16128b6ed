#pragma once

#include "boxideal/box.hpp"
#include "boxideal/groebner.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace boxideal {

/// Factor coordinates y[l,i], 1 <= i <= r_l, for each axis l in order.
VarTable segre_factor_table(const Box& box);

/// Image of a box-ring polynomial under x[i_1,...,i_n] -> y[1,i_1]...y[n,i_n].
/// `a` must be generic; the result lives over `factor_ring`.
Polynomial segre_image(const Polynomial& p, const BoxMatrix& a, const RingPtr& factor_ring);

/// Every generator of I_2(A) maps to zero under the Segre substitution.
bool segre_vanishing(const BoxMatrix& a);
/// Same test for an arbitrary generator list over a's ring.
bool segre_vanishing(const BoxMatrix& a, std::span<const Polynomial> gens);

struct KernelOracleOptions {
  std::size_t gate_positions = 12;
  GbOptions gb;
};

/// Kernel of the Segre substitution, by eliminating the y variables from
/// <x_pos - prod y>. Returned as a reduced basis over box_ring(box).
/// Throws GateExceeded above the position gate.
Ideal kernel_oracle(const Box& box, const KernelOracleOptions& options = {});

struct ConcreteTensor {
  Box box;
  std::vector<Rational> values;  // by linear position

  explicit ConcreteTensor(Box b) : box(std::move(b)), values(box.count()) {}
  Rational& at(std::span<const int> pos) { return values.at(box.linear(pos)); }
  const Rational& at(std::span<const int> pos) const { return values.at(box.linear(pos)); }
  bool is_zero() const;

  /// v_1 (x) ... (x) v_n.
  static ConcreteTensor outer(const std::vector<std::vector<Rational>>& factors);
};

/// A minor x_P x_Q - x_P' x_Q' (P' and Q' swap coordinate `axis`) that is
/// nonzero at the tensor.
struct TensorMinor {
  std::size_t axis;  // 0-based
  std::vector<int> first;
  std::vector<int> second;
  Rational value;
  std::string poly;  // the minor in the box ring's notation
};

struct Decomposition {
  bool decomposable = false;
  std::vector<std::vector<Rational>> factors;  // set when decomposable
  std::optional<TensorMinor> witness;          // set otherwise
};

/// Decomposability via the 2x2 minors. When decomposable, the factors are
/// read off the fibres through the lexicographically first nonzero entry
/// and checked to reproduce T exactly. Throws StructuralError on T = 0.
Decomposition is_decomposable(const ConcreteTensor& t);

struct HilbertCounts {
  mpz_class ideal_dim;
  mpz_class quotient_dim;
};

/// Closed form for I_2 of a generic box: quotient prod C(r_i+t-1, t),
/// ideal C(prod r_i + t - 1, t) minus that.
HilbertCounts hilbert_formula(std::span<const int> sizes, std::uint32_t t);

/// prod r_i - sum r_i + (n - 1).
long grade_formula(std::span<const int> sizes);

/// Under x_i -> (prod_l x_{pivot with slot l replaced by i_l}) / x_pivot^(n-1),
/// every minor's numerator (after clearing the pivot power) is zero.
bool phi_kills_minors(const BoxMatrix& a, std::span<const int> pivot);

} // namespace boxideal
