#include "boxideal/groebner.hpp"

#include "boxideal/errors.hpp"

#include <algorithm>
#include <set>

namespace boxideal {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    require_same_ring(g.ring(), ring_, "Ideal");
    if (!g.is_zero())
      gens_.push_back(std::move(g));
  }
}

Ideal Ideal::reduced_basis(RingPtr ring, std::vector<Polynomial> basis,
                           std::optional<std::uint32_t> truncated_at) {
  Ideal out(std::move(ring), std::move(basis));
  out.groebner_ = true;
  out.truncated_at_ = truncated_at;
  return out;
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

// out = a[ia..] + c*m*b[ib..], all descending.
void merge_scaled(std::vector<Term>& out, const std::vector<Term>& a, std::size_t ia, const Rational& c,
                  const Monomial& m, const std::vector<Term>& b, std::size_t ib, const MonomialOrder& ord) {
  out.clear();
  out.reserve((a.size() - ia) + (b.size() - ib));
  Rational tmp;
  while (ia < a.size() || ib < b.size()) {
    if (ib == b.size()) {
      out.push_back(a[ia++]);
      continue;
    }
    Monomial mb = b[ib].mono * m;
    if (ia == a.size()) {
      out.push_back({c * b[ib].coeff, std::move(mb)});
      ++ib;
      continue;
    }
    auto cmp = ord.compare(a[ia].mono, mb);
    if (cmp > 0) {
      out.push_back(a[ia++]);
    } else if (cmp < 0) {
      out.push_back({c * b[ib].coeff, std::move(mb)});
      ++ib;
    } else {
      tmp = c * b[ib].coeff;
      tmp += a[ia].coeff;
      if (tmp != 0)
        out.push_back({tmp, std::move(mb)});
      ++ia;
      ++ib;
    }
  }
}

class Reducer {
public:
  explicit Reducer(const GbOptions& options) : max_terms_(options.max_terms) {}

  void add(const Polynomial* p) {
    divisors_.push_back(p);
    masks_.push_back(p->leading_monomial().mask());
  }
  void clear() {
    divisors_.clear();
    masks_.clear();
  }

  const Polynomial* find(const Monomial& m) const {
    const std::uint64_t mm = m.mask();
    for (std::size_t k = 0; k < divisors_.size(); ++k)
      if ((masks_[k] & ~mm) == 0 && divisors_[k]->leading_monomial().divides(m))
        return divisors_[k];
    return nullptr;
  }

  Polynomial reduce(const Polynomial& f) const {
    const MonomialOrder& ord = f.ring()->order();
    std::vector<Term> rem;
    std::vector<Term> h = f.terms();
    std::vector<Term> scratch;
    std::size_t start = 0;
    while (start < h.size()) {
      const Term& lead = h[start];
      const Polynomial* d = find(lead.mono);
      if (!d) {
        rem.push_back(std::move(h[start]));
        ++start;
        continue;
      }
      Rational c = -lead.coeff / d->leading_coeff();
      Monomial m = lead.mono.quotient(d->leading_monomial());
      merge_scaled(scratch, h, start + 1, c, m, d->terms(), 1, ord);
      std::swap(h, scratch);
      start = 0;
      if (h.size() + rem.size() > max_terms_)
        throw BudgetExhausted("reduction exceeded the term budget of " + std::to_string(max_terms_));
    }
    return Polynomial::from_sorted_terms(f.ring(), std::move(rem));
  }

private:
  std::vector<const Polynomial*> divisors_;
  std::vector<std::uint64_t> masks_;
  std::size_t max_terms_;
};

} // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const GbOptions& options) {
  Reducer r(options);
  for (const auto& d : divisors) {
    require_same_ring(f.ring(), d.ring(), "normal_form");
    if (!d.is_zero())
      r.add(&d);
  }
  return r.reduce(f);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "s_polynomial");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.mul_term(1 / f.leading_coeff(), l.quotient(f.leading_monomial()));
  return add_scaled(a, -1 / g.leading_coeff(), l.quotient(g.leading_monomial()), g);
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "divide_exact");
  if (g.is_zero())
    throw StructuralError("division by the zero polynomial");
  std::vector<Term> quotient;
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term& lead = h.leading_term();
    if (!g.leading_monomial().divides(lead.mono))
      throw VerificationError("divide_exact: nonzero remainder");
    Rational c = lead.coeff / g.leading_coeff();
    Monomial m = lead.mono.quotient(g.leading_monomial());
    quotient.push_back({c, m});
    h = add_scaled(h, -c, m, g);
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

GroebnerCheck check_groebner(std::span<const Polynomial> basis, const GbOptions& options) {
  GroebnerCheck out;
  Reducer r(options);
  for (const auto& g : basis) {
    if (g.is_zero())
      throw StructuralError("check_groebner: zero element in basis");
    require_same_ring(g.ring(), basis.front().ring(), "check_groebner");
    r.add(&g);
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      ++out.pairs_total;
      if (coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) {
        ++out.coprime_skipped;
        continue;
      }
      if (out.pairs_reduced >= options.max_spairs)
        throw BudgetExhausted("check_groebner exceeded the S-pair budget of " +
                              std::to_string(options.max_spairs));
      ++out.pairs_reduced;
      Polynomial rem = r.reduce(s_polynomial(basis[i], basis[j]));
      if (!rem.is_zero()) {
        out.is_groebner = false;
        out.certificate = GroebnerCertificate{i, j, std::move(rem)};
        return out;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Buchberger

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis) {
  if (basis.empty())
    return basis;
  const MonomialOrder& ord = basis.front().ring()->order();
  for (auto& g : basis)
    g = g.monic();
  std::stable_sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (auto& g : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& k) {
      return k.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant)
      minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    const Polynomial& g = minimal[i];
    // Tail terms are smaller than LT(g), so only other elements can divide them.
    Polynomial tail = Polynomial::from_sorted_terms(
        g.ring(), std::vector<Term>(g.terms().begin() + 1, g.terms().end()));
    Polynomial nf = normal_form(tail, minimal, GbOptions{});
    reduced.push_back(Polynomial::term(g.ring(), 1, g.leading_monomial()) + nf);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return reduced;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t sugar;
};

struct PairLess {
  const MonomialOrder* ord;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar)
      return a.sugar < b.sugar;
    if (auto c = ord->compare(a.lcm, b.lcm); c != 0)
      return c < 0;
    if (a.i != b.i)
      return a.i < b.i;
    return a.j < b.j;
  }
};

class BuchbergerRun {
public:
  BuchbergerRun(const RingPtr& ring, const GbOptions& options, GbStats& stats)
      : ring_(ring), options_(options), stats_(stats), pairs_(PairLess{&ring->order()}), reducer_(options) {}

  void insert_input(std::vector<Polynomial> gens) {
    const MonomialOrder& ord = ring_->order();
    std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (auto& g : gens) {
      Polynomial r = reduce(g);
      if (!r.is_zero())
        add(r.monic(), r.degree());
    }
  }

  void run() {
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (options_.degree_limit && p.lcm.degree() > *options_.degree_limit) {
        ++stats_.degree_skipped;
        continue;
      }
      if (stats_.pairs_reduced >= options_.max_spairs)
        throw BudgetExhausted("Buchberger exceeded the S-pair budget of " +
                              std::to_string(options_.max_spairs));
      ++stats_.pairs_reduced;
      Polynomial r = reduce(s_polynomial(basis_[p.i], basis_[p.j]));
      if (r.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      add(r.monic(), p.sugar);
    }
  }

  std::vector<Polynomial> active() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k])
        out.push_back(basis_[k]);
    return out;
  }

private:
  Polynomial reduce(const Polynomial& f) {
    reducer_.clear();
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k])
        reducer_.add(&basis_[k]);
    return reducer_.reduce(f);
  }

  std::uint32_t pair_sugar(std::size_t a, std::size_t b, const Monomial& l) const {
    auto sa = sugar_[a] + l.degree() - basis_[a].leading_monomial().degree();
    auto sb = sugar_[b] + l.degree() - basis_[b].leading_monomial().degree();
    return std::max(sa, sb);
  }

  // Gebauer-Moeller update for a new element h.
  void add(Polynomial poly, std::uint32_t sugar) {
    const std::size_t h = basis_.size();
    basis_.push_back(std::move(poly));
    sugar_.push_back(sugar);
    active_.push_back(false);
    const Monomial& lth = basis_[h].leading_monomial();

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < h; ++g)
      if (active_[g]) {
        const Monomial& ltg = basis_[g].leading_monomial();
        cands.push_back({g, lcm(lth, ltg), coprime(lth, ltg)});
      }
    stats_.pairs_created += cands.size();

    std::vector<Cand> kept;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      const Cand& c = cands[k];
      if (c.coprime) {
        kept.push_back(c);
        continue;
      }
      bool dominated = false;
      for (std::size_t q = k + 1; q < cands.size() && !dominated; ++q)
        dominated = cands[q].lcm.divides(c.lcm);
      for (std::size_t q = 0; q < kept.size() && !dominated; ++q)
        dominated = kept[q].lcm.divides(c.lcm);
      if (dominated)
        ++stats_.chain_skipped;
      else
        kept.push_back(c);
    }

    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (lth.divides(l) && !(lcm(basis_[it->i].leading_monomial(), lth) == l) &&
          !(lcm(basis_[it->j].leading_monomial(), lth) == l)) {
        ++stats_.chain_skipped;
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }

    for (auto& c : kept) {
      if (c.coprime) {
        ++stats_.coprime_skipped;
        continue;
      }
      std::uint32_t s = pair_sugar(c.g, h, c.lcm);
      pairs_.insert(Pair{c.g, h, std::move(c.lcm), s});
    }

    for (std::size_t g = 0; g < h; ++g)
      if (active_[g] && lth.divides(basis_[g].leading_monomial()))
        active_[g] = false;
    active_[h] = true;
  }

  RingPtr ring_;
  const GbOptions& options_;
  GbStats& stats_;
  std::vector<Polynomial> basis_;
  std::vector<std::uint32_t> sugar_;
  std::vector<bool> active_;
  std::set<Pair, PairLess> pairs_;
  Reducer reducer_;
};

} // namespace

Ideal buchberger(const Ideal& ideal, const GbOptions& options, GbStats* stats) {
  GbStats local;
  GbStats& st = stats ? *stats : local;
  if (options.degree_limit && !ideal.is_homogeneous())
    throw StructuralError("degree-truncated Buchberger requires homogeneous generators");
  BuchbergerRun run(ideal.ring(), options, st);
  run.insert_input(ideal.generators());
  run.run();
  std::optional<std::uint32_t> trunc;
  if (options.degree_limit && st.degree_skipped > 0)
    trunc = options.degree_limit;
  return Ideal::reduced_basis(ideal.ring(), reduce_basis(run.active()), trunc);
}

Ideal groebner(const Ideal& ideal, const GbOptions& options) {
  if (ideal.is_groebner() && !ideal.truncated_at())
    return ideal;
  return buchberger(ideal, options);
}

// ---------------------------------------------------------------------------
// Ideal operations

bool ideal_member(const Polynomial& f, const Ideal& basis) {
  if (!basis.is_groebner())
    throw StructuralError("ideal_member requires a Groebner basis");
  if (basis.truncated_at() && f.degree() > *basis.truncated_at())
    throw StructuralError("ideal_member: basis is truncated below the degree of the element");
  return normal_form(f, basis.generators()).is_zero();
}

bool contains(const Ideal& basis, const Ideal& other) {
  for (const auto& g : other.generators())
    if (!ideal_member(g, basis))
      return false;
  return true;
}

bool same_ideal(const Ideal& a, const Ideal& b, const GbOptions& options) {
  require_same_ring(a.ring(), b.ring(), "same_ideal");
  Ideal ga = groebner(a, options);
  Ideal gb = groebner(b, options);
  return contains(ga, b) && contains(gb, a);
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "sum");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop, const GbOptions& options) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->size();
  std::vector<bool> dropped(n, false);
  for (auto v : drop) {
    if (v >= n)
      throw StructuralError("eliminate: variable position out of range");
    dropped[v] = true;
  }
  std::vector<Variable> order_vars;
  std::vector<std::size_t> to_elim(n), from_elim;
  for (std::size_t v = 0; v < n; ++v)
    if (dropped[v]) {
      to_elim[v] = order_vars.size();
      order_vars.push_back(ring->vars()[v]);
      from_elim.push_back(v);
    }
  const std::size_t k = order_vars.size();
  if (k == 0)
    return buchberger(ideal, options);
  for (std::size_t v = 0; v < n; ++v)
    if (!dropped[v]) {
      to_elim[v] = order_vars.size();
      order_vars.push_back(ring->vars()[v]);
      from_elim.push_back(v);
    }
  RingPtr elim_ring = Ring::make(VarTable(std::move(order_vars)), MonomialOrder::block(k));
  std::vector<Polynomial> mapped;
  for (const auto& g : ideal.generators())
    mapped.push_back(remap(g, elim_ring, to_elim));
  Ideal gb = buchberger(Ideal(elim_ring, std::move(mapped)), options);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.generators()) {
    bool free = std::none_of(g.terms().begin(), g.terms().end(),
                             [&](const Term& t) { return !t.mono.is_one() && t.mono.powers().front().var < k; });
    if (free)
      kept.push_back(remap(g, ring, from_elim));
  }
  return buchberger(Ideal(ring, std::move(kept)), options);
}

namespace {

// Ring with one fresh auxiliary variable in front of `ring`'s variables.
std::string fresh_name(const VarTable& vars) {
  for (int i = 1;; ++i) {
    std::string name = "e" + std::to_string(i);
    if (!vars.find(name))
      return name;
  }
}

} // namespace

Ideal intersect(const Ideal& a, const Ideal& b, const GbOptions& options) {
  require_same_ring(a.ring(), b.ring(), "intersect");
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero())
    return Ideal(ring);
  const std::size_t n = ring->size();
  std::vector<Variable> vars{Variable::plain(fresh_name(ring->vars()))};
  vars.insert(vars.end(), ring->vars().variables().begin(), ring->vars().variables().end());
  RingPtr ext = Ring::make(VarTable(std::move(vars)), ring->order());
  std::vector<std::size_t> shift(n);
  for (std::size_t v = 0; v < n; ++v)
    shift[v] = v + 1;
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators())
    gens.push_back(t * remap(g, ext, shift));
  for (const auto& g : b.generators())
    gens.push_back(one_minus_t * remap(g, ext, shift));
  const std::size_t drop[] = {0};
  Ideal elim = eliminate(Ideal(ext, std::move(gens)), drop, options);
  std::vector<std::size_t> back(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v)
    back[v + 1] = v;
  std::vector<Polynomial> out;
  for (const auto& g : elim.generators())
    out.push_back(remap(g, ring, back));
  return buchberger(Ideal(ring, std::move(out)), options);
}

Ideal intersect(std::span<const Ideal> ideals, const GbOptions& options) {
  if (ideals.empty())
    throw StructuralError("intersect of an empty family");
  Ideal acc = groebner(ideals.front(), options);
  for (std::size_t k = 1; k < ideals.size(); ++k)
    acc = intersect(acc, ideals[k], options);
  return acc;
}

Ideal colon(const Ideal& ideal, const Polynomial& f, const GbOptions& options) {
  require_same_ring(ideal.ring(), f.ring(), "colon");
  if (f.is_zero())
    throw StructuralError("colon by the zero polynomial");
  if (f.is_constant())
    return groebner(ideal, options);
  Ideal meet = intersect(ideal, Ideal(ideal.ring(), {f}), options);
  std::vector<Polynomial> quotients;
  for (const auto& g : meet.generators())
    quotients.push_back(divide_exact(g, f));
  return buchberger(Ideal(ideal.ring(), std::move(quotients)), options);
}

Saturation saturate(const Ideal& ideal, const Polynomial& f, const GbOptions& options, unsigned max_steps) {
  Ideal current = groebner(ideal, options);
  for (unsigned step = 1; step <= max_steps; ++step) {
    Ideal next = colon(current, f, options);
    if (next.generators() == current.generators())
      return {std::move(current), step};
    current = std::move(next);
  }
  throw BudgetExhausted("saturation did not stabilize within " + std::to_string(max_steps) + " steps");
}

} // namespace boxideal
