#pragma once

#include "boxideal/groebner.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace boxideal {

mpz_class binomial(long n, long k);

/// Degree-t piece of a homogeneous ideal: quotient + ideal = C(N+t-1, t).
struct HilbertSample {
  std::uint32_t degree;
  mpz_class quotient_dim;
  mpz_class ideal_dim;
};

/// Counts degree-t monomials outside the leading-term ideal of `basis`.
HilbertSample standard_monomial_count(const Ideal& basis, std::uint32_t t);

/// Numerator Q of the Hilbert series Q(t)/(1-t)^N of S/LT(I); coefficient k
/// is the coefficient of t^k.
std::vector<mpz_class> hilbert_numerator(const Ideal& basis);

struct HilbertFitOptions {
  std::uint32_t max_sample_degree = 40;
};

struct DimensionDegree {
  std::size_t dimension = 0;    // Krull dimension of the quotient
  std::size_t codimension = 0;  // number of variables minus dimension
  mpz_class degree;             // leading coefficient times (dimension-1)!
  std::vector<mpz_class> h_vector;
  std::uint32_t first_sample = 0;  // samples used: first_sample .. first_sample+dimension
};

/// Dimension and degree of S/I. The Hilbert series numerator fixes where
/// the Hilbert function becomes polynomial; the polynomial is then fitted
/// through standard_monomial_count samples and checked against the series.
/// Throws BudgetExhausted (naming the number of samples needed) when the
/// required degrees exceed `max_sample_degree`.
DimensionDegree hilbert_dimension_degree(const Ideal& basis, const HilbertFitOptions& options = {});

} // namespace boxideal
