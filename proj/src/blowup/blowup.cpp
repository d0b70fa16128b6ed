#include "boxideal/blowup.hpp"

#include "boxideal/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace boxideal {

namespace {

std::size_t choose2(long m) { return m < 2 ? 0 : static_cast<std::size_t>(m * (m - 1) / 2); }

Rational power(const Rational& base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i)
    out *= base;
  return out;
}

Rational monomial_value(const Exponent3& alpha, const PlanePoint& p) {
  return power(p[0], alpha[0]) * power(p[1], alpha[1]) * power(p[2], alpha[2]);
}

RationalMatrix evaluation_matrix(const std::vector<PlanePoint>& pts, int degree) {
  const auto monos = monomials3(degree);
  RationalMatrix m(pts.size(), monos.size());
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c)
      m(r, c) = monomial_value(monos[c], pts[r]);
  return m;
}

Exponent3 exponents_of(const Monomial& m) {
  return {static_cast<int>(m.exponent(0)), static_cast<int>(m.exponent(1)), static_cast<int>(m.exponent(2))};
}

// Small integers in [-9, 9].
Rational draw(std::mt19937_64& rng) { return Rational(static_cast<long>(rng() % 19) - 9); }

std::size_t x_position(std::size_t i, std::size_t j, int d) {
  return (i - 1) * static_cast<std::size_t>(d + 1) + (j - 1);
}

} // namespace

bool generic_certificate(const PointSet& pts) {
  const std::size_t s = pts.points.size();
  if (s != choose2(pts.d + 1))
    return false;
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b) {
      // Projectively equal iff all 2x2 minors of the coordinate pair vanish.
      const auto& p = pts.points[a];
      const auto& q = pts.points[b];
      if (p[0] * q[1] == p[1] * q[0] && p[0] * q[2] == p[2] * q[0] && p[1] * q[2] == p[2] * q[1])
        return false;
    }
  for (const auto& p : pts.points)
    if (p[0] == 0 && p[1] == 0 && p[2] == 0)
      return false;
  for (int tau = 1; tau <= pts.d; ++tau) {
    const std::size_t expect = std::min(choose2(tau + 2), s);
    if (evaluation_matrix(pts.points, tau).rank() != expect)
      return false;
  }
  return true;
}

PointSet gen_points(int d, std::uint64_t seed, std::size_t max_attempts) {
  if (d < 1)
    throw StructuralError("point generation needs d >= 1");
  std::mt19937_64 rng(seed);
  const std::size_t s = choose2(d + 1);
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    PointSet pts{d, seed, attempt, {}};
    for (std::size_t k = 0; k < s; ++k) {
      Rational a = draw(rng);
      Rational b = draw(rng);
      pts.points.push_back({a, b, Rational(1)});
    }
    if (generic_certificate(pts))
      return pts;
  }
  throw GenericityError("no generic point set for d=" + std::to_string(d) + " after " +
                        std::to_string(max_attempts) + " draws from seed " + std::to_string(seed));
}

PointSet explicit_points(int d, std::vector<PlanePoint> points) {
  PointSet pts{d, 0, 1, std::move(points)};
  if (pts.points.size() != choose2(d + 1))
    throw StructuralError("expected " + std::to_string(choose2(d + 1)) + " points for d=" + std::to_string(d));
  if (!generic_certificate(pts))
    throw GenericityError("supplied points are not in generic position");
  return pts;
}

RingPtr plane_ring() {
  static const RingPtr ring = Ring::make(VarTable::numbered("w", 3), MonomialOrder::lex(VariableRank::first_largest));
  return ring;
}

Monomial plane_monomial(const Exponent3& alpha) {
  std::vector<VarPower> powers;
  for (std::uint32_t k = 0; k < 3; ++k)
    if (alpha[k] > 0)
      powers.push_back({k, static_cast<std::uint32_t>(alpha[k])});
  return Monomial::from_powers(std::move(powers));
}

std::vector<Polynomial> interpolate_Id(const PointSet& pts) {
  if (!generic_certificate(pts))
    throw GenericityError("interpolation needs points in generic position");
  const int d = pts.d;
  const auto monos = monomials3(d);
  const auto kernel = evaluation_matrix(pts.points, d).kernel();
  if (kernel.size() != static_cast<std::size_t>(d + 1))
    throw GenericityError("degree-" + std::to_string(d) + " forms through the points have dimension " +
                          std::to_string(kernel.size()) + ", expected " + std::to_string(d + 1));
  const RationalMatrix basis = RationalMatrix::from_rows(kernel, monos.size()).rref();
  std::vector<Polynomial> F;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (basis(r, c) != 0)
        terms.push_back({basis(r, c), plane_monomial(monos[c])});
    F.push_back(Polynomial::from_terms(plane_ring(), std::move(terms)));
  }
  return F;
}

std::vector<Polynomial> signed_minors(const HilbertBurchData& hb) {
  const std::size_t d = hb.L.size();
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j <= d; ++j) {
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t l = 0; l < d; ++l) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c <= d; ++c)
        if (c != j)
          row.push_back(hb.L[l][c]);
      sub.push_back(std::move(row));
    }
    Polynomial det = determinant(sub, plane_ring());
    out.push_back(j % 2 == 0 ? det : -det);
  }
  return out;
}

HilbertBurchData hilbert_burch(const std::vector<Polynomial>& F, std::uint64_t seed) {
  if (F.size() < 2)
    throw StructuralError("Hilbert-Burch needs at least two forms");
  const std::size_t d = F.size() - 1;
  const RingPtr ring = plane_ring();
  for (const auto& f : F)
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != d)
      throw StructuralError("Hilbert-Burch input must be forms of degree " + std::to_string(d));

  // Unknown (j,k) at column 3j + k: coefficient of w_k in the syzygy entry
  // for F_j. Rows: degree-(d+1) monomials.
  const auto targets = monomials3(static_cast<int>(d) + 1);
  RationalMatrix system(targets.size(), 3 * (d + 1));
  for (std::size_t j = 0; j <= d; ++j)
    for (const auto& term : F[j].terms()) {
      Exponent3 alpha = exponents_of(term.mono);
      for (std::size_t k = 0; k < 3; ++k) {
        Exponent3 shifted = alpha;
        ++shifted[k];
        system(monomial3_index(shifted) - 1, 3 * j + k) += term.coeff;
      }
    }
  const auto kernel = system.kernel();
  if (kernel.size() != d)
    throw GenericityError("linear syzygies of I_d have dimension " + std::to_string(kernel.size()) + ", expected " +
                          std::to_string(d));
  const RationalMatrix rows = RationalMatrix::from_rows(kernel, 3 * (d + 1)).rref();

  HilbertBurchData hb;
  hb.F = F;
  for (std::size_t l = 0; l < d; ++l) {
    std::vector<Polynomial> row;
    std::vector<std::array<Rational, 3>> coeffs;
    for (std::size_t j = 0; j <= d; ++j) {
      std::array<Rational, 3> c{rows(l, 3 * j), rows(l, 3 * j + 1), rows(l, 3 * j + 2)};
      std::vector<Term> terms;
      for (std::size_t k = 0; k < 3; ++k)
        if (c[k] != 0)
          terms.push_back({c[k], Monomial::variable(k)});
      row.push_back(Polynomial::from_terms(ring, std::move(terms)));
      coeffs.push_back(c);
    }
    hb.L.push_back(std::move(row));
    hb.lambda.push_back(std::move(coeffs));
  }

  for (std::size_t l = 0; l < d; ++l) {
    Polynomial sum(ring);
    for (std::size_t j = 0; j <= d; ++j)
      sum += hb.L[l][j] * F[j];
    if (!sum.is_zero())
      throw VerificationError("row " + std::to_string(l + 1) + " of L is not a syzygy of F");
  }

  const auto minors = signed_minors(hb);
  std::optional<Rational> rho;
  for (std::size_t j = 0; j <= d && !rho; ++j)
    if (!minors[j].is_zero()) {
      if (F[j].leading_monomial() != minors[j].leading_monomial())
        throw VerificationError("F is not proportional to the signed maximal minors of L");
      rho = F[j].leading_coeff() / minors[j].leading_coeff();
    }
  if (!rho)
    throw GenericityError("all maximal minors of L vanish");
  for (std::size_t j = 0; j <= d; ++j)
    if (!(F[j] == minors[j].scaled(*rho)))
      throw VerificationError("F_" + std::to_string(j + 1) + " differs from rho times its signed minor");
  hb.rho = *rho;

  // Rank d at a random point off F_1 = 0.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int tries = 0;; ++tries) {
    if (tries == 1000)
      throw GenericityError("could not find a point off F_1 = 0");
    PlanePoint p{draw(rng), draw(rng), draw(rng)};
    if (F[0].evaluate(p) == 0)
      continue;
    RationalMatrix at(d, d + 1);
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t j = 0; j <= d; ++j)
        at(l, j) = hb.L[l][j].evaluate(p);
    if (at.rank() != d)
      throw VerificationError("L drops rank at a point off F_1 = 0");
    break;
  }
  return hb;
}

RingPtr blowup_ring(int d, int n) {
  const int u = static_cast<int>(choose2(n + 2));
  return Ring::make(VarTable::box({u, d + 1}), box_order());
}

RelationSet build_relations(const HilbertBurchData& hb, int n) {
  if (n < 1)
    throw StructuralError("relations need n >= 1");
  const int d = static_cast<int>(hb.L.size());
  RelationSet rel;
  rel.n = n;
  rel.z_monomials = monomials3(n);
  rel.betas = monomials3(n - 1);
  rel.u = rel.z_monomials.size();
  rel.ring = blowup_ring(d, n);
  const std::size_t count = rel.betas.size() * static_cast<std::size_t>(d);
  rel.E = RationalMatrix(count, rel.ring->size());
  for (std::size_t b = 0; b < rel.betas.size(); ++b)
    for (int l = 0; l < d; ++l) {
      const std::size_t row = b * static_cast<std::size_t>(d) + static_cast<std::size_t>(l);
      for (int j = 0; j <= d; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          Exponent3 alpha = rel.betas[b];
          ++alpha[k];
          const std::size_t i = monomial3_index(alpha);
          rel.E(row, x_position(i, static_cast<std::size_t>(j) + 1, d)) += hb.lambda[l][j][k];
        }
    }
  for (std::size_t r = 0; r < count; ++r) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < rel.E.cols(); ++c)
      if (rel.E(r, c) != 0)
        terms.push_back({rel.E(r, c), Monomial::variable(c)});
    rel.relations.push_back(Polynomial::from_terms(rel.ring, std::move(terms)));
  }
  rel.rank = rel.E.rank();
  if (rel.rank != count)
    throw VerificationError("the relation matrix E has rank " + std::to_string(rel.rank) + ", but maximal rank " +
                            std::to_string(count) + " must hold for generic points");
  return rel;
}

BoxMatrix build_box_A(int d, int n, const RingPtr& ring) {
  const CatalecticantPattern cat = catalecticant(n);
  Box box({d + 1, 3, static_cast<int>(cat.cols)});
  std::vector<std::size_t> entries(box.count());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    auto pos = box.position(k);
    const std::size_t z = cat.at(static_cast<std::size_t>(pos[1] - 1), static_cast<std::size_t>(pos[2] - 1));
    entries[k] = ring->vars().position(Variable::indexed("x", {static_cast<int>(z), pos[0]}).name());
  }
  return BoxMatrix(box, ring, std::move(entries));
}

Ideal assemble_ideal(const RelationSet& rel, const BoxMatrix& box) {
  require_same_ring(rel.ring, box.ring(), "assemble_ideal");
  std::vector<Polynomial> gens = rel.relations;
  for (auto& m : minor_list(box))
    gens.push_back(std::move(m.poly));
  return Ideal(rel.ring, std::move(gens));
}

BlowupModel build_model(int n, PointSet points) {
  const int d = points.d;
  std::vector<Polynomial> F = interpolate_Id(points);
  HilbertBurchData hb = hilbert_burch(F, points.seed);
  RelationSet rel = build_relations(hb, n);
  BoxMatrix box = build_box_A(d, n, rel.ring);
  Ideal ideal = assemble_ideal(rel, box);
  const int t = d + n;
  const std::size_t p = rel.u * static_cast<std::size_t>(d + 1) - 1;
  return BlowupModel{d, n, t, p, std::move(points), std::move(hb), std::move(rel), catalecticant(n),
                     std::move(box), std::move(ideal)};
}

BlowupModel build_model(int d, int n, std::uint64_t seed) { return build_model(n, gen_points(d, seed)); }

bool VanishingReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

// x[i,j] -> z_i(w) F_j(w) over the plane ring.
std::vector<std::optional<Polynomial>> coordinate_map(const BlowupModel& m) {
  std::vector<std::optional<Polynomial>> assign(m.rel.ring->size());
  for (std::size_t i = 1; i <= m.rel.u; ++i)
    for (std::size_t j = 1; j <= static_cast<std::size_t>(m.d) + 1; ++j)
      assign[x_position(i, j, m.d)] = m.hb.F[j - 1].mul_term(1, plane_monomial(m.rel.z_monomials[i - 1]));
  return assign;
}

Check identity_check(const std::string& name, std::span<const Polynomial> gens,
                     const std::vector<std::optional<Polynomial>>& assign) {
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Polynomial image = substitute(gens[g], plane_ring(), assign);
    if (!image.is_zero())
      return {name, false, "generator " + std::to_string(g + 1) + " (" + gens[g].to_string() + ") maps to " +
                               image.to_string()};
  }
  return {name, true, std::to_string(gens.size()) + " polynomials vanish identically"};
}

} // namespace

VanishingReport verify_vanishing(const BlowupModel& m, const VanishingOptions& options) {
  VanishingReport report;
  auto add = [&](Check c) { report.checks.push_back(std::move(c)); };
  const std::size_t s = m.points.points.size();
  const int d = m.d;

  add({"generic_certificate", generic_certificate(m.points),
       std::to_string(s) + " points, drawn in " + std::to_string(m.points.attempts) + " attempt(s)"});

  {
    bool ok = m.hb.F.size() == static_cast<std::size_t>(d + 1);
    for (const auto& f : m.hb.F)
      for (const auto& p : m.points.points)
        ok = ok && f.evaluate(p) == 0;
    add({"interpolation", ok, std::to_string(m.hb.F.size()) + " forms of degree " + std::to_string(d) +
                                  " vanish at every point"});
  }

  {
    bool ok = true;
    for (const auto& row : m.hb.L) {
      Polynomial sum(plane_ring());
      for (std::size_t j = 0; j < row.size(); ++j)
        sum += row[j] * m.hb.F[j];
      ok = ok && sum.is_zero();
    }
    add({"syzygy_identity", ok, std::to_string(m.hb.L.size()) + " rows of L annihilate F"});
  }

  {
    const auto minors = signed_minors(m.hb);
    bool ok = m.hb.rho != 0;
    for (std::size_t j = 0; j < minors.size(); ++j)
      ok = ok && m.hb.F[j] == minors[j].scaled(m.hb.rho);
    add({"signed_minor_identity", ok, "rho = " + m.hb.rho.get_str()});
  }

  {
    const std::size_t expect = choose2(m.n + 1) * static_cast<std::size_t>(d);
    const std::size_t ambient = choose2(m.n + 2) * static_cast<std::size_t>(d + 1);
    const bool ok = m.rel.relations.size() == expect && m.rel.rank == expect && m.rel.E.rank() == expect &&
                    m.rel.ring->size() == ambient && m.p + 1 == ambient;
    add({"relation_rank", ok, "rank E = " + std::to_string(m.rel.E.rank()) + ", relations " +
                                  std::to_string(m.rel.relations.size()) + " (expected " + std::to_string(expect) +
                                  "), ambient variables " + std::to_string(m.rel.ring->size()) + " (expected " +
                                  std::to_string(ambient) + ")"});
  }

  const auto assign = coordinate_map(m);
  add(identity_check("generators_vanish", m.ideal.generators(), assign));

  // (**): minors of the u x (d+1) matrix M = (x[i,j]).
  const BoxMatrix M = BoxMatrix::generic(Box({static_cast<int>(m.rel.u), d + 1}), m.rel.ring);
  {
    std::vector<Polynomial> gens;
    for (auto& mi : minor_list(M))
      gens.push_back(std::move(mi.poly));
    add(identity_check("flattening_minors_vanish", gens, assign));
  }

  // (***): Catalecticant minors under z_l -> w^alpha_l.
  {
    bool ok = true;
    std::size_t count = 0;
    const auto& pat = m.cat;
    for (std::size_t r1 = 0; r1 < 3; ++r1)
      for (std::size_t r2 = r1 + 1; r2 < 3; ++r2)
        for (std::size_t c1 = 0; c1 < pat.cols; ++c1)
          for (std::size_t c2 = c1 + 1; c2 < pat.cols; ++c2) {
            auto z = [&](std::size_t r, std::size_t c) { return plane_monomial(m.rel.z_monomials[pat.at(r, c) - 1]); };
            ok = ok && z(r1, c1) * z(r2, c2) == z(r1, c2) * z(r2, c1);
            ++count;
          }
    add({"catalecticant_minors_vanish", ok, std::to_string(count) + " minors of Cat(1," + std::to_string(m.n - 1) +
                                                ";3) vanish on the Veronese monomials"});
  }

  std::mt19937_64 rng(options.seed ^ 0x5851f42d4c957f2dULL);
  {
    bool ok = true;
    std::string detail;
    std::size_t done = 0;
    while (done < options.image_points && ok) {
      PlanePoint P{draw(rng), draw(rng), draw(rng)};
      std::vector<Rational> f;
      bool off = false;
      for (const auto& Fj : m.hb.F) {
        f.push_back(Fj.evaluate(P));
        off = off || f.back() != 0;
      }
      if (!off)
        continue;  // P lies on the base locus
      std::vector<Rational> z;
      for (const auto& alpha : m.rel.z_monomials)
        z.push_back(monomial_value(alpha, P));
      std::vector<Rational> Q(m.rel.ring->size());
      RationalMatrix MQ(m.rel.u, d + 1);
      for (std::size_t i = 1; i <= m.rel.u; ++i)
        for (std::size_t j = 1; j <= static_cast<std::size_t>(d) + 1; ++j) {
          Q[x_position(i, j, d)] = z[i - 1] * f[j - 1];
          MQ(i - 1, j - 1) = Q[x_position(i, j, d)];
        }
      for (const auto& g : m.ideal.generators())
        if (g.evaluate(Q) != 0) {
          ok = false;
          detail = "generator " + g.to_string() + " is nonzero at phi(P)";
        }
      if (ok && MQ.rank() != 1) {
        ok = false;
        detail = "M(phi(P)) does not have rank 1";
      }
      if (ok) {
        // Recover z from a nonzero column and compare with the Veronese vector.
        std::size_t col = 0;
        while (f[col] == 0)
          ++col;
        RationalMatrix pair(2, m.rel.u);
        for (std::size_t i = 0; i < m.rel.u; ++i) {
          pair(0, i) = MQ(i, col);
          pair(1, i) = z[i];
        }
        if (pair.rank() != 1) {
          ok = false;
          detail = "recovered z is not proportional to the Veronese vector of P";
        }
      }
      ++done;
    }
    if (ok)
      detail = std::to_string(done) + " random image points satisfy all generators; M has rank 1 and recovers z";
    add({"image_points", ok, detail});
  }

  {
    bool ok = true;
    std::size_t done = 0;
    for (; done < options.ambient_points && ok; ++done) {
      std::vector<Rational> Q(m.rel.ring->size());
      for (auto& q : Q)
        q = draw(rng);
      ok = std::any_of(m.ideal.generators().begin(), m.ideal.generators().end(),
                       [&](const Polynomial& g) { return g.evaluate(Q) != 0; });
    }
    add({"nonzero_at_random_points", ok,
         ok ? std::to_string(done) + " random points of P^" + std::to_string(m.p) + " violate some generator"
            : "every generator vanishes at a random point"});
  }

  if (m.n == 1)
    add(collapse_check(m));
  return report;
}

bool SurfaceReport::passed() const {
  bool ok = linear_rank == expected_linear && ambient == expected_ambient &&
            degree_t_dimension == expected_degree_t_dimension;
  if (dimension)
    ok = ok && *dimension == expected_dimension;
  if (degree)
    ok = ok && *degree == expected_degree;
  return ok;
}

SurfaceReport verify_surface(const BlowupModel& m, const GbOptions& gb, const HilbertFitOptions& fit) {
  SurfaceReport r;
  const long s = static_cast<long>(m.points.points.size());
  r.expected_degree = static_cast<long>(m.t) * m.t - s;
  r.linear_rank = m.rel.E.rank();
  r.expected_linear = choose2(m.n + 1) * static_cast<std::size_t>(m.d);
  r.ambient = m.rel.ring->size();
  r.expected_ambient = choose2(m.n + 2) * static_cast<std::size_t>(m.d + 1);

  // dim span{w^alpha F_j} in degree t.
  {
    const auto targets = monomials3(m.t);
    RationalMatrix forms(m.rel.u * m.hb.F.size(), targets.size());
    std::size_t row = 0;
    for (const auto& alpha : m.rel.z_monomials)
      for (const auto& f : m.hb.F) {
        for (const auto& term : f.terms()) {
          Exponent3 e = exponents_of(term.mono);
          for (std::size_t k = 0; k < 3; ++k)
            e[k] += alpha[k];
          forms(row, monomial3_index(e) - 1) += term.coeff;
        }
        ++row;
      }
    r.degree_t_dimension = forms.rank();
    r.expected_degree_t_dimension = static_cast<std::size_t>((m.n + 1) * m.d) + choose2(m.n + 2);
  }

  try {
    Ideal basis = buchberger(m.ideal, gb);
    r.gb_size = basis.generators().size();
    DimensionDegree dd = hilbert_dimension_degree(basis, fit);
    r.dimension = dd.dimension;
    r.degree = dd.degree;
    r.complete = true;
  } catch (const BudgetExhausted& e) {
    r.complete = false;
    r.partial_reason = e.what();
  }
  return r;
}

Check collapse_check(const BlowupModel& m) {
  if (m.n != 1)
    return {"collapse", false, "only defined for n = 1"};
  const int d = m.d;
  const BoxMatrix& A = m.box;
  bool ok = A.box() == Box({d + 1, 3, 1}) && A.injective() && A.entries().size() == m.rel.ring->size();
  for (int i = 1; ok && i <= d + 1; ++i)
    for (int j = 1; ok && j <= 3; ++j) {
      const int pos[3] = {i, j, 1};
      ok = A.entry(std::span<const int>(pos, 3)) == x_position(static_cast<std::size_t>(j), static_cast<std::size_t>(i), d);
    }
  if (ok) {
    std::set<std::string> box_minors, matrix_minors;
    for (const auto& mi : minor_list(A))
      box_minors.insert(mi.poly.to_string());
    const BoxMatrix M = BoxMatrix::generic(Box({3, d + 1}), m.rel.ring);
    for (const auto& mi : minor_list(M))
      matrix_minors.insert(mi.poly.to_string());
    ok = box_minors == matrix_minors;
  }
  return {"collapse", ok,
          ok ? "box is the transpose of the 3 x " + std::to_string(d + 1) + " matrix (x[i,j]) with the same minors"
             : "box differs from the ordinary 3 x " + std::to_string(d + 1) + " matrix"};
}

} // namespace boxideal
