#include "boxideal/blowup.hpp"
#include "boxideal/box.hpp"
#include "boxideal/catalecticant.hpp"
#include "boxideal/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace boxideal;

namespace {

std::set<std::string> normalized(const std::vector<Polynomial>& gens) {
  std::set<std::string> out;
  for (const auto& g : gens)
    out.insert(g.sign_normalized().to_string());
  return out;
}

// Every size vector with 2..4 factors, each >= 1, and at most `limit` positions.
std::vector<std::vector<int>> small_boxes(int limit) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int prod) -> void {
    if (cur.size() >= 2)
      out.push_back(cur);
    if (cur.size() == 4)
      return;
    for (int r = 1; prod * r <= limit; ++r) {
      cur.push_back(r);
      self(self, prod * r);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

} // namespace

TEST_CASE("box specs") {
  Box b = Box::parse("2x3x4");
  CHECK(b.sizes == std::vector<int>{2, 3, 4});
  CHECK(b.count() == 24);
  CHECK(b.to_string() == "2x3x4");
  CHECK(b.position(0) == std::vector<int>{1, 1, 1});
  CHECK(b.position(1) == std::vector<int>{1, 1, 2});
  CHECK(b.position(23) == std::vector<int>{2, 3, 4});
  for (std::size_t k = 0; k < b.count(); ++k)
    CHECK(b.linear(b.position(k)) == k);
  for (const char* bad : {"", "2", "2x", "x2", "2x0", "2x-1", "2xx3", "2x3y", "a"})
    CHECK_THROWS_AS(Box::parse(bad), ParseError);
}

TEST_CASE("minor examples") {
  BoxMatrix a = BoxMatrix::generic(Box::parse("2x2"));
  Ideal i = all_minors(a);
  REQUIRE(i.generators().size() == 1);
  CHECK(i.generators()[0].to_string() == "x[1,2]*x[2,1] - x[1,1]*x[2,2]");
  CHECK(i.generators()[0].leading_coeff() == 1);

  BoxMatrix c = BoxMatrix::generic(Box::parse("2x2x2"));
  for (std::size_t l = 0; l < 3; ++l)
    CHECK(minors(c, l).size() == 6);
  Ideal ic = all_minors(c);
  CHECK(ic.generators().size() == 12);
  // Twelve quadrics spanning nine dimensions.
  CHECK(oracle::ideal_degree_dim(ic.generators(), 8, 2) == 9);

  Ideal i23 = all_minors(BoxMatrix::generic(Box::parse("2x3")));
  CHECK(i23.generators().size() == 3);
  CHECK(oracle::ideal_degree_dim(i23.generators(), 6, 2) == 3);

  CHECK(all_minors(BoxMatrix::generic(Box::parse("1x5"))).generators().empty());
  CHECK_THROWS_AS(minors(a, 2), StructuralError);
}

TEST_CASE("generator order is by axis then position pair") {
  BoxMatrix a = BoxMatrix::generic(Box::parse("2x2x3"));
  auto list = minor_list(a);
  for (std::size_t k = 1; k < list.size(); ++k) {
    const auto& p = list[k - 1];
    const auto& q = list[k];
    CHECK(std::tie(p.axis, p.first, p.second) < std::tie(q.axis, q.first, q.second));
    CHECK(q.first < q.second);
  }
  // Running twice gives the identical list.
  auto again = minor_list(a);
  REQUIRE(again.size() == list.size());
  for (std::size_t k = 0; k < list.size(); ++k)
    CHECK(again[k].poly == list[k].poly);
}

TEST_CASE("minor counts agree with exhaustive enumeration") {
  for (const auto& sizes : small_boxes(24)) {
    CAPTURE(Box(sizes).to_string());
    BoxMatrix a = BoxMatrix::generic(Box(sizes));
    std::set<oracle::MinorKey> all;
    for (std::size_t l = 0; l < sizes.size(); ++l) {
      auto brute = oracle::brute_minors(sizes, l);
      const long others = std::accumulate(sizes.begin(), sizes.end(), 1L, std::multiplies<>()) / sizes[l];
      const mpz_class closed = oracle::binom(sizes[l], 2) * oracle::binom(others, 2);
      CHECK(minors(a, l).size() == brute.distinct.size());
      CHECK(brute.distinct.size() == closed);
      CHECK(brute.nonzero_ordered_pairs == 2 * closed);
      all.insert(brute.distinct.begin(), brute.distinct.end());
    }
    CHECK(minor_list(a).size() == all.size());
  }
}

TEST_CASE("minors commute with permuting the axes") {
  for (const char* spec : {"2x3", "2x2x3", "3x2x2", "2x3x2", "1x2x3", "2x2x2x2"}) {
    Box b = Box::parse(spec);
    BoxMatrix a = BoxMatrix::generic(b);
    const auto base = normalized(all_minors(a).generators());
    std::vector<std::size_t> perm(b.dimension());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> psizes;
      for (auto k : perm)
        psizes.push_back(b.sizes[k]);
      BoxMatrix pa = BoxMatrix::generic(Box(psizes));
      // x'[p'] with p'[k] = p[perm[k]] is renamed x[p].
      std::vector<std::optional<Polynomial>> rename(pa.box().count());
      for (std::size_t lin = 0; lin < pa.box().count(); ++lin) {
        auto pp = pa.box().position(lin);
        std::vector<int> p(pp.size());
        for (std::size_t k = 0; k < perm.size(); ++k)
          p[perm[k]] = pp[k];
        rename[lin] = a.entry_poly(b.linear(p));
      }
      std::vector<Polynomial> moved;
      const Ideal pi = all_minors(pa);
      for (const auto& g : pi.generators())
        moved.push_back(substitute(g, a.ring(), rename));
      CHECK(normalized(moved) == base);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("sub-boxes and face ideals") {
  BoxMatrix a = BoxMatrix::generic(Box::parse("2x2"));
  BoxMatrix a1 = sub_box(a, 0);
  CHECK(a1.box().sizes == std::vector<int>{1, 2});
  CHECK(face_positions(a.box(), 0) == std::vector<std::size_t>{2, 3});
  Ideal i1 = face_ideal(a, 0);
  std::vector<std::string> g;
  for (const auto& p : i1.generators())
    g.push_back(p.to_string());
  std::sort(g.begin(), g.end());
  CHECK(g == std::vector<std::string>{"x[2,1]", "x[2,2]"});

  BoxMatrix c = BoxMatrix::generic(Box::parse("2x2x2"));
  std::vector<Ideal> faces;
  for (std::size_t l = 0; l < 3; ++l) {
    Ideal il = face_ideal(c, l);
    std::size_t vars = 0, quadrics = 0;
    for (const auto& p : il.generators())
      (p.degree() == 1 ? vars : quadrics) += 1;
    CHECK(vars == 4);
    CHECK(quadrics == 1);
    CHECK(face_positions(c.box(), l).size() == 4);
    faces.push_back(il);
  }
  Ideal corner = sum(all_minors(c), Ideal(c.ring(), {c.entry_poly(7)}));
  CHECK(same_ideal(intersect(faces), corner));
  CHECK_THROWS_AS(sub_box(BoxMatrix::generic(Box::parse("1x3")), 0), StructuralError);
}

TEST_CASE("sections of a 3-D box") {
  Sections s = sections(BoxMatrix::generic(Box::parse("2x3x4")));
  REQUIRE(s.x.size() == 2);
  REQUIRE(s.y.size() == 3);
  REQUIRE(s.z.size() == 4);
  CHECK((s.x[0].rows == 3 && s.x[0].cols == 4));
  CHECK((s.y[0].rows == 2 && s.y[0].cols == 4));
  CHECK((s.z[0].rows == 2 && s.z[0].cols == 3));
  Box b = Box::parse("2x3x4");
  const std::vector<int> pos{2, 1, 3};
  CHECK(s.y[0].at(1, 2) == b.linear(pos));
  CHECK(s.z[2].at(1, 0) == b.linear(pos));
  CHECK(s.x[1].at(0, 2) == b.linear(pos));

  BoxMatrix slab = BoxMatrix::generic(Box::parse("1x3x4"));
  Sections t = sections(slab);
  REQUIRE(t.x.size() == 1);
  CHECK(t.x[0].vars == slab.entries());
  CHECK_THROWS_AS(sections(BoxMatrix::generic(Box::parse("2x2"))), StructuralError);
}

TEST_CASE("Catalecticant patterns") {
  CatalecticantPattern c1 = catalecticant(1);
  CHECK(c1.cols == 1);
  CHECK(c1.entries == std::vector<std::size_t>{1, 2, 3});
  CatalecticantPattern c2 = catalecticant(2);
  CHECK(c2.cols == 3);
  CHECK(c2.entries == std::vector<std::size_t>{1, 2, 3, 2, 4, 5, 3, 5, 6});
  CHECK(monomials3(2).size() == 6);
  CHECK(monomial3_index({0, 1, 1}) == 5);
  for (int n = 1; n <= 4; ++n) {
    auto c = catalecticant(n);
    CHECK(c.cols == monomials3(n - 1).size());
    std::set<std::size_t> used(c.entries.begin(), c.entries.end());
    CHECK(used.size() == monomials3(n).size());
  }

  EntryMatrix sym{3, 3, {10, 11, 12, 11, 13, 14, 12, 14, 15}};
  CHECK(matches_catalecticant(sym));
  EntryMatrix plain{3, 3, {0, 1, 2, 3, 4, 5, 6, 7, 8}};
  CHECK_FALSE(matches_catalecticant(plain));
  EntryMatrix merged{3, 3, {10, 11, 12, 11, 13, 14, 12, 14, 10}};
  CHECK_FALSE(matches_catalecticant(merged));
}

TEST_CASE("weak box check on a generic box") {
  WeakBoxReport r = weak_box_check(BoxMatrix::generic(Box::parse("2x2x2")));
  CHECK(r.entries_are_variables.verdict == Verdict::pass);
  CHECK(r.corner_intersection.verdict == Verdict::pass);
  CHECK(r.killing_position.verdict == Verdict::pass);
  CHECK(r.prime_sections.verdict == Verdict::pass);
  CHECK(r.passed());

  WeakBoxOptions gated;
  gated.gate_positions = 4;
  WeakBoxReport s = weak_box_check(BoxMatrix::generic(Box::parse("2x2x2")), gated);
  CHECK(s.corner_intersection.verdict == Verdict::skipped);
  CHECK_FALSE(s.corner_intersection.detail.empty());
  CHECK(s.passed());
}

TEST_CASE("a repeated variable inside a y-section fails the section check") {
  Box b = Box::parse("2x2x2");
  RingPtr ring = box_ring(b);
  std::vector<std::size_t> entries(8);
  std::iota(entries.begin(), entries.end(), 0);
  // (1,1,1) and (2,1,2) share j = 1.
  entries[b.linear(std::vector<int>{2, 1, 2})] = entries[0];
  WeakBoxReport r = weak_box_check(BoxMatrix(b, ring, entries));
  CHECK(r.prime_sections.verdict == Verdict::fail);
  CHECK(r.prime_sections.detail.find("y") != std::string::npos);
  CHECK_FALSE(r.passed());
}

TEST_CASE("the blowup box for d=1, n=2") {
  BlowupModel m = build_model(1, 2, 1);
  REQUIRE(m.box.box().sizes == std::vector<int>{2, 3, 3});
  WeakBoxReport r = weak_box_check(m.box);
  CHECK(r.entries_are_variables.verdict == Verdict::pass);
  CHECK(r.killing_position.verdict == Verdict::pass);
  CHECK(r.prime_sections.verdict == Verdict::pass);
  const Sections secs = sections(m.box);
  for (const auto& x : secs.x)
    CHECK(matches_catalecticant(x));

  // The corner intersection fails here: this product lies in every face
  // ideal but not in <I_2(A), corner entry>.
  CHECK(r.corner_intersection.verdict == Verdict::fail);
  Polynomial w = Polynomial::parse(m.box.ring(), "x[4,2]*x[5,1]");
  for (std::size_t l = 0; l < 3; ++l)
    CHECK(ideal_member(w, buchberger(face_ideal(m.box, l))));
  Ideal corner = sum(all_minors(m.box), Ideal(m.box.ring(), {m.box.entry_poly(m.box.box().count() - 1)}));
  CHECK(m.box.ring()->vars().name(m.box.entry(m.box.box().count() - 1)) == "x[6,2]");
  CHECK_FALSE(ideal_member(w, buchberger(corner)));
}
