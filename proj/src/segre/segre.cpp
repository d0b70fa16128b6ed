#include "boxideal/segre.hpp"

#include "boxideal/errors.hpp"
#include "boxideal/hilbert.hpp"

#include <algorithm>
#include <limits>

namespace boxideal {

VarTable segre_factor_table(const Box& box) {
  std::vector<Variable> vars;
  for (std::size_t l = 0; l < box.dimension(); ++l)
    for (int i = 1; i <= box.sizes[l]; ++i)
      vars.push_back(Variable::indexed("y", {static_cast<int>(l) + 1, i}));
  return VarTable(std::move(vars));
}

namespace {

void require_generic(const BoxMatrix& a, const char* what) {
  if (!a.injective())
    throw StructuralError(std::string(what) + " needs a generic box (distinct entries)");
}

// Position of y[l,i] (0-based axis, 1-based i) inside a table that starts
// with `offset` other variables.
std::size_t factor_var(const Box& box, std::size_t offset, std::size_t axis, int i) {
  std::size_t pos = offset;
  for (std::size_t l = 0; l < axis; ++l)
    pos += static_cast<std::size_t>(box.sizes[l]);
  return pos + static_cast<std::size_t>(i - 1);
}

Monomial segre_monomial(const Box& box, std::size_t offset, std::span<const int> pos) {
  std::vector<VarPower> powers;
  for (std::size_t l = 0; l < box.dimension(); ++l)
    powers.push_back({static_cast<std::uint32_t>(factor_var(box, offset, l, pos[l])), 1});
  return Monomial::from_powers(std::move(powers));
}

} // namespace

Polynomial segre_image(const Polynomial& p, const BoxMatrix& a, const RingPtr& factor_ring) {
  require_generic(a, "segre_image");
  std::vector<std::optional<Polynomial>> assign(a.ring()->size());
  for (std::size_t k = 0; k < a.box().count(); ++k)
    assign[a.entry(k)] = Polynomial::term(factor_ring, 1, segre_monomial(a.box(), 0, a.box().position(k)));
  return substitute(p, factor_ring, assign);
}

bool segre_vanishing(const BoxMatrix& a, std::span<const Polynomial> gens) {
  RingPtr factor_ring = Ring::make(segre_factor_table(a.box()), box_order());
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Polynomial& g) { return segre_image(g, a, factor_ring).is_zero(); });
}

bool segre_vanishing(const BoxMatrix& a) {
  const Ideal i2 = all_minors(a);
  return segre_vanishing(a, i2.generators());
}

Ideal kernel_oracle(const Box& box, const KernelOracleOptions& options) {
  if (box.count() > options.gate_positions)
    throw GateExceeded("Segre kernel oracle: box " + box.to_string() + " has " + std::to_string(box.count()) +
                       " positions, gate is " + std::to_string(options.gate_positions));
  const VarTable xs = VarTable::box(box.sizes);
  RingPtr big = Ring::make(xs.concat(segre_factor_table(box)), box_order());
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < box.count(); ++k)
    gens.push_back(Polynomial::variable(big, k) - Polynomial::term(big, 1, segre_monomial(box, xs.size(), box.position(k))));
  std::vector<std::size_t> drop;
  for (std::size_t v = xs.size(); v < big->size(); ++v)
    drop.push_back(v);
  Ideal kernel = eliminate(Ideal(big, std::move(gens)), drop, options.gb);

  RingPtr target = box_ring(box);
  std::vector<std::size_t> var_map(big->size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t v = 0; v < xs.size(); ++v)
    var_map[v] = v;
  std::vector<Polynomial> out;
  for (const auto& g : kernel.generators())
    out.push_back(remap(g, target, var_map));
  return Ideal::reduced_basis(target, reduce_basis(std::move(out)));
}

bool ConcreteTensor::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v == 0; });
}

ConcreteTensor ConcreteTensor::outer(const std::vector<std::vector<Rational>>& factors) {
  std::vector<int> sizes;
  for (const auto& f : factors)
    sizes.push_back(static_cast<int>(f.size()));
  ConcreteTensor t{Box(sizes)};
  for (std::size_t k = 0; k < t.box.count(); ++k) {
    auto pos = t.box.position(k);
    Rational v = 1;
    for (std::size_t l = 0; l < factors.size(); ++l)
      v *= factors[l][pos[l] - 1];
    t.values[k] = v;
  }
  return t;
}

Decomposition is_decomposable(const ConcreteTensor& t) {
  if (t.is_zero())
    throw StructuralError("decomposability is undefined for the zero tensor");
  const Box& box = t.box;
  const std::size_t n = box.count();
  Decomposition out;

  for (std::size_t axis = 0; axis < box.dimension(); ++axis)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        auto pp = box.position(p);
        auto qq = box.position(q);
        if (pp[axis] == qq[axis])
          continue;
        auto p2 = pp, q2 = qq;
        std::swap(p2[axis], q2[axis]);
        Rational value = t.values[p] * t.values[q] - t.at(p2) * t.at(q2);
        if (value == 0)
          continue;
        BoxMatrix generic = BoxMatrix::generic(box);
        const auto& names = generic.ring()->vars();
        std::string poly = names.name(p) + "*" + names.name(q) + " - " + names.name(box.linear(p2)) + "*" +
                           names.name(box.linear(q2));
        out.witness = TensorMinor{axis, pp, qq, value, poly};
        return out;
      }

  std::size_t anchor = 0;
  while (t.values[anchor] == 0)
    ++anchor;
  const auto a = box.position(anchor);
  const Rational& ta = t.values[anchor];
  for (std::size_t l = 0; l < box.dimension(); ++l) {
    std::vector<Rational> v(box.sizes[l]);
    for (int k = 1; k <= box.sizes[l]; ++k) {
      auto pos = a;
      pos[l] = k;
      v[k - 1] = l == 0 ? t.at(pos) : Rational(t.at(pos) / ta);
    }
    out.factors.push_back(std::move(v));
  }
  if (ConcreteTensor::outer(out.factors).values != t.values)
    throw VerificationError("vanishing minors but the reconstructed factors do not reproduce the tensor");
  out.decomposable = true;
  return out;
}

HilbertCounts hilbert_formula(std::span<const int> sizes, std::uint32_t t) {
  mpz_class quotient = 1;
  long total = 1;
  for (int r : sizes) {
    quotient *= binomial(r + static_cast<long>(t) - 1, t);
    total *= r;
  }
  mpz_class ambient = binomial(total + static_cast<long>(t) - 1, t);
  return {ambient - quotient, quotient};
}

long grade_formula(std::span<const int> sizes) {
  long prod = 1, sum = 0;
  for (int r : sizes) {
    prod *= r;
    sum += r;
  }
  return prod - sum + static_cast<long>(sizes.size()) - 1;
}

bool phi_kills_minors(const BoxMatrix& a, std::span<const int> pivot) {
  require_generic(a, "phi_kills_minors");
  const Box& box = a.box();
  const std::size_t dim = box.dimension();
  const RingPtr& ring = a.ring();
  const std::size_t pivot_var = a.entry(pivot);

  // Numerators N(x_i) = prod_l x_{pivot with slot l := i_l}.
  std::vector<std::optional<Polynomial>> image(ring->size());
  for (std::size_t k = 0; k < box.count(); ++k) {
    auto pos = box.position(k);
    std::vector<VarPower> powers;
    for (std::size_t l = 0; l < dim; ++l) {
      std::vector<int> slot(pivot.begin(), pivot.end());
      slot[l] = pos[l];
      powers.push_back({static_cast<std::uint32_t>(a.entry(slot)), 1});
    }
    image[a.entry(k)] = Polynomial::term(ring, 1, Monomial::from_powers(std::move(powers)));
  }

  const Ideal i2 = all_minors(a);
  for (const auto& m : i2.generators()) {
    // Bring every term over the common denominator x_pivot^(deg(m)(n-1)).
    const std::uint32_t top = m.degree();
    Polynomial numerator(ring);
    for (const auto& term : m.terms()) {
      Polynomial single = Polynomial::term(ring, term.coeff, term.mono);
      Polynomial mapped = substitute(single, ring, image);
      const std::uint32_t pad = (top - term.mono.degree()) * static_cast<std::uint32_t>(dim - 1);
      numerator += mapped.mul_term(1, Monomial::variable(pivot_var, pad));
    }
    if (!numerator.is_zero())
      return false;
  }
  return true;
}

} // namespace boxideal
