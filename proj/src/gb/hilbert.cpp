#include "boxideal/hilbert.hpp"

#include "boxideal/errors.hpp"

#include <algorithm>

namespace boxideal {

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

namespace {

void require_graded_basis(const Ideal& basis, std::uint32_t t, const char* what) {
  if (!basis.is_groebner())
    throw StructuralError(std::string(what) + " requires a Groebner basis");
  if (!basis.is_homogeneous())
    throw StructuralError(std::string(what) + " requires a homogeneous ideal");
  if (basis.truncated_at() && *basis.truncated_at() < t)
    throw StructuralError(std::string(what) + ": basis is truncated below degree " + std::to_string(t));
}

struct StandardCounter {
  std::size_t nvars;
  std::vector<Monomial> leads;
  std::vector<std::uint32_t> exps;
  mpz_class standard = 0;
  mpz_class in_ideal = 0;

  bool divisible() const {
    for (const auto& m : leads) {
      bool ok = true;
      for (const auto& p : m.powers())
        if (exps[p.var] < p.exp) {
          ok = false;
          break;
        }
      if (ok)
        return true;
    }
    return false;
  }

  // Assign exponents to variables var..nvars-1 with `left` degree remaining.
  void walk(std::size_t var, std::uint32_t left) {
    if (var + 1 == nvars) {
      exps[var] = left;
      if (divisible())
        ++in_ideal;
      else
        ++standard;
      exps[var] = 0;
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      exps[var] = e;
      if (e > 0 && divisible()) {
        // Every completion is divisible as well.
        const long rest_vars = static_cast<long>(nvars - var - 1);
        const long rest_deg = static_cast<long>(left - e);
        in_ideal += binomial(rest_vars + rest_deg - 1, rest_deg);
        continue;
      }
      walk(var + 1, left - e);
    }
    exps[var] = 0;
  }
};

using DenseMono = std::vector<std::uint32_t>;
using TPoly = std::vector<mpz_class>;

bool dense_divides(const DenseMono& a, const DenseMono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

std::uint32_t dense_degree(const DenseMono& m) {
  std::uint32_t d = 0;
  for (auto e : m)
    d += e;
  return d;
}

void minimalize(std::vector<DenseMono>& gens) {
  std::sort(gens.begin(), gens.end(), [](const DenseMono& a, const DenseMono& b) {
    auto da = dense_degree(a), db = dense_degree(b);
    return da != db ? da < db : a < b;
  });
  std::vector<DenseMono> kept;
  for (auto& g : gens)
    if (std::none_of(kept.begin(), kept.end(), [&](const DenseMono& k) { return dense_divides(k, g); }))
      kept.push_back(std::move(g));
  gens = std::move(kept);
}

void add_into(TPoly& acc, const TPoly& p, std::size_t shift) {
  if (acc.size() < p.size() + shift)
    acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    acc[i + shift] += p[i];
}

TPoly multiply(const TPoly& a, const TPoly& b) {
  TPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

TPoly numerator(std::vector<DenseMono> gens, std::size_t nvars) {
  minimalize(gens);
  if (gens.empty())
    return {1};
  bool pairwise_coprime = true;
  for (std::size_t v = 0; v < nvars && pairwise_coprime; ++v) {
    int users = 0;
    for (const auto& g : gens)
      users += g[v] > 0;
    pairwise_coprime = users <= 1;
  }
  if (pairwise_coprime) {
    TPoly out{1};
    for (const auto& g : gens) {
      TPoly f(dense_degree(g) + 1, 0);
      f[0] = 1;
      f.back() -= 1;
      out = multiply(out, f);
    }
    return out;
  }
  // Pivot on the variable most used by non-pure-power generators.
  std::size_t pivot = 0;
  int best = -1;
  for (std::size_t v = 0; v < nvars; ++v) {
    int count = 0;
    for (const auto& g : gens) {
      int support = 0;
      for (auto e : g)
        support += e > 0;
      if (support >= 2 && g[v] > 0)
        ++count;
    }
    if (count > best) {
      best = count;
      pivot = v;
    }
  }
  std::vector<DenseMono> plus;
  std::vector<DenseMono> quotient;
  for (const auto& g : gens) {
    if (g[pivot] == 0)
      plus.push_back(g);
    DenseMono q = g;
    if (q[pivot] > 0)
      --q[pivot];
    quotient.push_back(std::move(q));
  }
  DenseMono x(nvars, 0);
  x[pivot] = 1;
  plus.push_back(std::move(x));
  // K(M) = K(M + <x>) + t K(M : x)
  TPoly out = numerator(std::move(plus), nvars);
  add_into(out, numerator(std::move(quotient), nvars), 1);
  while (out.size() > 1 && out.back() == 0)
    out.pop_back();
  return out;
}

mpz_class sum_of(const TPoly& p) {
  mpz_class s = 0;
  for (const auto& c : p)
    s += c;
  return s;
}

} // namespace

HilbertSample standard_monomial_count(const Ideal& basis, std::uint32_t t) {
  require_graded_basis(basis, t, "standard_monomial_count");
  const std::size_t n = basis.ring()->size();
  HilbertSample out{t, 0, 0};
  mpz_class ambient = n == 0 ? mpz_class(t == 0 ? 1 : 0) : binomial(static_cast<long>(n + t) - 1, t);
  if (n == 0) {
    out.quotient_dim = basis.is_zero() ? ambient : mpz_class(0);
    out.ideal_dim = ambient - out.quotient_dim;
    return out;
  }
  StandardCounter counter{n, {}, std::vector<std::uint32_t>(n, 0)};
  for (const auto& g : basis.generators())
    counter.leads.push_back(g.leading_monomial());
  if (std::any_of(counter.leads.begin(), counter.leads.end(), [](const Monomial& m) { return m.is_one(); })) {
    out.quotient_dim = 0;
    out.ideal_dim = ambient;
    return out;
  }
  counter.walk(0, t);
  out.quotient_dim = counter.standard;
  out.ideal_dim = counter.in_ideal;
  if (out.quotient_dim + out.ideal_dim != ambient)
    throw VerificationError("standard monomial enumeration lost monomials");
  return out;
}

std::vector<mpz_class> hilbert_numerator(const Ideal& basis) {
  require_graded_basis(basis, 0, "hilbert_numerator");
  if (basis.truncated_at())
    throw StructuralError("hilbert_numerator needs a complete Groebner basis");
  const std::size_t n = basis.ring()->size();
  std::vector<DenseMono> gens;
  for (const auto& g : basis.generators()) {
    DenseMono d(n, 0);
    for (const auto& p : g.leading_monomial().powers())
      d[p.var] = p.exp;
    gens.push_back(std::move(d));
  }
  return numerator(std::move(gens), n);
}

DimensionDegree hilbert_dimension_degree(const Ideal& basis, const HilbertFitOptions& options) {
  const std::size_t n = basis.ring()->size();
  TPoly h = hilbert_numerator(basis);
  std::size_t factors = 0;
  while (sum_of(h) == 0 && !(h.size() == 1 && h[0] == 0)) {
    // h(t) = (1 - t) p(t)
    TPoly p(h.size() - 1, 0);
    mpz_class run = 0;
    for (std::size_t k = 0; k + 1 < h.size(); ++k) {
      run += h[k];
      p[k] = run;
    }
    h = std::move(p);
    ++factors;
  }
  DimensionDegree out;
  out.dimension = n - factors;
  out.codimension = factors;
  out.h_vector = h;
  const long deg_h = static_cast<long>(h.size()) - 1;
  const long dim = static_cast<long>(out.dimension);

  // Unit ideal: the quotient is zero.
  if (h.size() == 1 && h[0] == 0) {
    out.degree = 0;
    return out;
  }
  const std::uint32_t first = static_cast<std::uint32_t>(std::max(0L, deg_h - dim + 1));
  const std::uint32_t count = dim == 0 ? static_cast<std::uint32_t>(deg_h + 1) : static_cast<std::uint32_t>(dim + 1);
  const std::uint32_t start = dim == 0 ? 0 : first;
  if (start + count - 1 > options.max_sample_degree)
    throw BudgetExhausted("Hilbert polynomial fit needs " + std::to_string(count) + " samples at degrees " +
                          std::to_string(start) + ".." + std::to_string(start + count - 1) +
                          " but the sample degree limit is " + std::to_string(options.max_sample_degree));
  out.first_sample = start;
  std::vector<mpz_class> values;
  for (std::uint32_t t = start; t < start + count; ++t)
    values.push_back(standard_monomial_count(basis, t).quotient_dim);

  mpz_class fitted;
  if (dim == 0) {
    fitted = 0;
    for (const auto& v : values)
      fitted += v;
  } else {
    // Forward differences: the (dim-1)-th is the degree, the dim-th vanishes.
    std::vector<mpz_class> diff = values;
    for (long order = 1; order <= dim; ++order) {
      for (std::size_t i = 0; i + 1 < diff.size(); ++i)
        diff[i] = diff[i + 1] - diff[i];
      diff.pop_back();
      if (order == dim - 1)
        fitted = diff.front();
    }
    if (dim == 1)
      fitted = values.front();
    if (diff.front() != 0)
      throw VerificationError("Hilbert function samples are not polynomial in the expected range");
  }
  out.degree = fitted;
  if (fitted != sum_of(h))
    throw VerificationError("fitted Hilbert polynomial disagrees with the Hilbert series numerator");
  return out;
}

} // namespace boxideal
