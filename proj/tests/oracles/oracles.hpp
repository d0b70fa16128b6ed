#pragma once

// Test-only reference implementations. They share nothing with the library
// beyond reading Polynomial terms: monomials are dense exponent vectors,
// linear algebra is a plain Gaussian elimination over mpq_class written
// here.

#include "boxideal/polynomial.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Dense = std::vector<unsigned>;
using Row = std::map<Dense, mpq_class>;

inline Dense dense_of(const boxideal::Monomial& m, std::size_t nvars) {
  Dense d(nvars, 0);
  for (const auto& p : m.powers())
    d[p.var] = p.exp;
  return d;
}

inline Row row_of(const boxideal::Polynomial& p) {
  Row r;
  for (const auto& t : p.terms())
    r[dense_of(t.mono, p.ring()->size())] = t.coeff;
  return r;
}

/// All exponent vectors of total degree `deg` in `nvars` variables.
inline std::vector<Dense> monomials_of_degree(std::size_t nvars, unsigned deg) {
  std::vector<Dense> out;
  Dense cur(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      cur[i] = left;
      out.push_back(cur);
      cur[i] = 0;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  if (nvars == 0) {
    if (deg == 0)
      out.push_back({});
    return out;
  }
  rec(rec, 0, deg);
  return out;
}

/// Rank of a set of sparse rows by straightforward elimination. Basis rows
/// are kept fully reduced against each other's (explicitly stored) pivots.
inline std::size_t rank(std::vector<Row> rows) {
  std::vector<std::pair<Dense, Row>> basis;
  auto eliminate = [](Row& target, const Dense& piv, const Row& by) {
    auto it = target.find(piv);
    if (it == target.end())
      return;
    const mpq_class f = it->second / by.at(piv);
    for (const auto& [k, v] : by) {
      mpq_class& slot = target[k];
      slot -= f * v;
      if (slot == 0)
        target.erase(k);
    }
  };
  for (auto& row : rows) {
    for (const auto& [piv, b] : basis)
      eliminate(row, piv, b);
    if (row.empty())
      continue;
    const Dense piv = row.begin()->first;
    for (auto& [other, b] : basis)
      eliminate(b, piv, row);
    basis.emplace_back(piv, std::move(row));
  }
  return basis.size();
}

/// dim of the degree-t piece of the ideal generated by homogeneous `gens`:
/// the span of all m*g with deg m + deg g = t.
inline std::size_t ideal_degree_dim(const std::vector<boxideal::Polynomial>& gens, std::size_t nvars, unsigned t) {
  std::vector<Row> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > t)
      continue;
    const Row base = row_of(g);
    for (const auto& m : monomials_of_degree(nvars, t - g.degree())) {
      Row r;
      for (const auto& [k, v] : base) {
        Dense e = k;
        for (std::size_t i = 0; i < nvars; ++i)
          e[i] += m[i];
        r[e] = v;
      }
      rows.push_back(std::move(r));
    }
  }
  return rank(std::move(rows));
}

/// Whether two homogeneous generator sets agree in every degree <= tmax.
inline bool same_up_to_degree(const std::vector<boxideal::Polynomial>& a, const std::vector<boxideal::Polynomial>& b,
                              std::size_t nvars, unsigned tmax) {
  std::vector<boxideal::Polynomial> both = a;
  both.insert(both.end(), b.begin(), b.end());
  for (unsigned t = 0; t <= tmax; ++t) {
    const std::size_t da = ideal_degree_dim(a, nvars, t);
    if (da != ideal_degree_dim(b, nvars, t) || da != ideal_degree_dim(both, nvars, t))
      return false;
  }
  return true;
}

inline mpz_class binom(long n, long k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  mpz_class r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Box enumeration

inline std::vector<std::vector<int>> box_positions(const std::vector<int>& sizes) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(sizes.size(), 1);
  while (true) {
    out.push_back(cur);
    std::size_t j = sizes.size();
    while (j > 0) {
      --j;
      if (cur[j] < sizes[j]) {
        ++cur[j];
        break;
      }
      cur[j] = 1;
      if (j == 0)
        return out;
    }
  }
}

/// A minor as an unordered pair of unordered position pairs, so that sign
/// and pair order do not matter.
using PosPair = std::pair<std::vector<int>, std::vector<int>>;
using MinorKey = std::pair<PosPair, PosPair>;

inline PosPair sorted_pair(std::vector<int> a, std::vector<int> b) {
  if (b < a)
    std::swap(a, b);
  return {std::move(a), std::move(b)};
}

inline MinorKey minor_key(PosPair x, PosPair y) {
  if (y < x)
    std::swap(x, y);
  return {std::move(x), std::move(y)};
}

struct BruteMinors {
  std::size_t nonzero_ordered_pairs = 0;  // unordered position pairs giving a nonzero minor
  std::set<MinorKey> distinct;
};

/// Every unordered pair of positions, about one axis.
inline BruteMinors brute_minors(const std::vector<int>& sizes, std::size_t axis) {
  BruteMinors out;
  const auto pos = box_positions(sizes);
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = a + 1; b < pos.size(); ++b) {
      auto p2 = pos[a], q2 = pos[b];
      std::swap(p2[axis], q2[axis]);
      PosPair left = sorted_pair(pos[a], pos[b]);
      PosPair right = sorted_pair(p2, q2);
      if (left == right)
        continue;
      ++out.nonzero_ordered_pairs;
      out.distinct.insert(minor_key(left, right));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Tensors

/// Rank of the flattening of a tensor along `axis`: rows indexed by the
/// axis coordinate, columns by the remaining coordinates.
inline std::size_t flattening_rank(const std::vector<int>& sizes, const std::vector<mpq_class>& values,
                                   std::size_t axis) {
  const auto pos = box_positions(sizes);
  std::vector<Row> rows(sizes[axis]);
  for (std::size_t k = 0; k < pos.size(); ++k) {
    if (values[k] == 0)
      continue;
    Dense col;
    for (std::size_t j = 0; j < sizes.size(); ++j)
      if (j != axis)
        col.push_back(static_cast<unsigned>(pos[k][j]));
    rows[pos[k][axis] - 1][col] = values[k];
  }
  return rank(std::move(rows));
}

inline bool flattenings_rank_le_1(const std::vector<int>& sizes, const std::vector<mpq_class>& values) {
  for (std::size_t l = 0; l < sizes.size(); ++l)
    if (flattening_rank(sizes, values, l) > 1)
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Random instances

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }
  mpq_class nonzero_rational(long bound) {
    long num = 0;
    while (num == 0)
      num = integer(-bound, bound);
    mpq_class q(num, integer(1, 3));
    q.canonicalize();
    return q;
  }
  bool coin() { return rng() & 1; }

  /// Random homogeneous polynomial of degree `deg` with up to `terms` terms.
  boxideal::Polynomial homogeneous(const boxideal::RingPtr& ring, unsigned deg, std::size_t terms) {
    std::vector<boxideal::Term> out;
    for (std::size_t i = 0; i < terms; ++i) {
      std::vector<boxideal::VarPower> powers;
      for (unsigned e = 0; e < deg; ++e)
        powers.push_back({static_cast<std::uint32_t>(integer(0, static_cast<long>(ring->size()) - 1)), 1});
      out.push_back({nonzero_rational(5), boxideal::Monomial::from_powers(std::move(powers))});
    }
    return boxideal::Polynomial::from_terms(ring, std::move(out));
  }

  /// Random polynomial of degree <= maxdeg.
  boxideal::Polynomial any(const boxideal::RingPtr& ring, unsigned maxdeg, std::size_t terms) {
    boxideal::Polynomial p(ring);
    for (std::size_t i = 0; i < terms; ++i)
      p += homogeneous(ring, static_cast<unsigned>(integer(0, maxdeg)), 1);
    return p;
  }
};

} // namespace oracle
