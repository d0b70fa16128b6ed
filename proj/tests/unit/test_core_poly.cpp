#include "boxideal/errors.hpp"
#include "boxideal/linalg.hpp"
#include "boxideal/polynomial.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace boxideal;

namespace {

RingPtr box22() {
  return Ring::make(VarTable::box({2, 2}), MonomialOrder::degrevlex(VariableRank::first_smallest));
}

RingPtr w3(MonomialOrder order = MonomialOrder::degrevlex()) { return Ring::make(VarTable::numbered("w", 3), order); }

Polynomial P(const RingPtr& r, const char* text) { return Polynomial::parse(r, text); }

} // namespace

TEST_CASE("box variables are listed in lexicographic order of their indices") {
  VarTable t = VarTable::box({2, 3});
  REQUIRE(t.size() == 6);
  CHECK(t.name(0) == "x[1,1]");
  CHECK(t.name(1) == "x[1,2]");
  CHECK(t.name(3) == "x[2,1]");
  CHECK(t.name(5) == "x[2,3]");
  CHECK(t.position("x[2,2]") == 4);
  CHECK_FALSE(t.find("x[3,1]"));
  CHECK_THROWS_AS(t.position("y"), StructuralError);
}

TEST_CASE("degrevlex with x[1,1] smallest puts x12*x21 above x11*x22") {
  RingPtr r = box22();
  auto x = [&](const char* n) { return Monomial::variable(r->vars().position(n)); };
  CHECK(r->compare(x("x[1,2]") * x("x[2,1]"), x("x[1,1]") * x("x[2,2]")) > 0);
  CHECK(r->compare(x("x[2,2]"), x("x[1,1]")) > 0);
  Polynomial det = P(r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]");
  CHECK(r->format(det.leading_monomial()) == "x[1,2]*x[2,1]");
  CHECK(det.leading_coeff() == -1);
}

TEST_CASE("lex and degrevlex on w1 > w2 > w3") {
  RingPtr lex = w3(MonomialOrder::lex());
  RingPtr grevlex = w3();
  // w1 w3^2 vs w2^3: lex prefers w1, degrevlex looks at the last variable.
  Polynomial a = P(lex, "w1*w3^2 + w2^3");
  CHECK(lex->format(a.leading_monomial()) == "w1*w3^2");
  Polynomial b = P(grevlex, "w1*w3^2 + w2^3");
  CHECK(grevlex->format(b.leading_monomial()) == "w2^3");
  // Degree first under degrevlex.
  Polynomial c = P(grevlex, "w1^3 + w3^4");
  CHECK(grevlex->format(c.leading_monomial()) == "w3^4");
}

TEST_CASE("order descriptors round-trip") {
  for (auto o : {MonomialOrder::lex(), MonomialOrder::degrevlex(VariableRank::first_smallest),
                 MonomialOrder::block(2, OrderKind::degrevlex, VariableRank::first_largest),
                 MonomialOrder::block(3, OrderKind::lex, VariableRank::first_smallest)})
    CHECK(MonomialOrder::parse(o.describe()) == o);
  CHECK_THROWS(MonomialOrder::parse("revlex"));
}

TEST_CASE("block order eliminates the first variables") {
  RingPtr r = Ring::make(VarTable::numbered("v", 3), MonomialOrder::block(1));
  // Anything with v1 beats anything without, regardless of degree.
  Polynomial p = P(r, "v2^5*v3^4 + v1");
  CHECK(r->format(p.leading_monomial()) == "v1");
}

TEST_CASE("order properties hold on random monomials") {
  oracle::Gen g(11);
  for (auto order : {MonomialOrder::lex(), MonomialOrder::degrevlex(), MonomialOrder::degrevlex(VariableRank::first_smallest),
                     MonomialOrder::block(2), MonomialOrder::block(2, OrderKind::lex, VariableRank::first_smallest)}) {
    auto rnd = [&] {
      std::vector<std::uint32_t> e(5);
      for (auto& x : e)
        x = static_cast<std::uint32_t>(g.integer(0, 3));
      return Monomial::from_dense(e);
    };
    for (int i = 0; i < 300; ++i) {
      Monomial a = rnd(), b = rnd(), c = rnd();
      auto ab = order.compare(a, b);
      // Antisymmetry and multiplicativity.
      CHECK((order.compare(b, a) < 0) == (ab > 0));
      CHECK((order.compare(b, a) == 0) == (ab == 0));
      CHECK(order.compare(a * c, b * c) == ab);
      // 1 is the least monomial.
      CHECK(order.compare(a * c, a) >= 0);
      // Transitivity.
      if (ab < 0 && order.compare(b, c) < 0)
        CHECK(order.compare(a, c) < 0);
      if (order.is_graded() && a.degree() != b.degree())
        CHECK((ab < 0) == (a.degree() < b.degree()));
    }
  }
}

TEST_CASE("monomial divisibility, lcm and gcd") {
  Monomial a = Monomial::from_dense(std::vector<std::uint32_t>{2, 0, 1});
  Monomial b = Monomial::from_dense(std::vector<std::uint32_t>{1, 3, 0});
  CHECK(lcm(a, b) == Monomial::from_dense(std::vector<std::uint32_t>{2, 3, 1}));
  CHECK(gcd(a, b) == Monomial::variable(0));
  CHECK(a.divides(lcm(a, b)));
  CHECK_FALSE(a.divides(b));
  CHECK(lcm(a, b).quotient(a) == Monomial::from_dense(std::vector<std::uint32_t>{0, 3, 0}));
  CHECK_FALSE(coprime(a, b));
  CHECK(coprime(Monomial::variable(0), Monomial::variable(2, 4)));
  CHECK(a.degree() == 3);
}

TEST_CASE("parse and print use the canonical grammar") {
  RingPtr r = w3();
  Polynomial p = P(r, "3/2*w1^2 - w2*w3 + 0*w1 + w2*w3 - 1/2*w1^2");
  CHECK(p.to_string() == "w1^2");
  CHECK(P(r, "0").is_zero());
  CHECK(P(r, "-2/4").to_string() == "-1/2");
  CHECK(P(r, "w1 - w1").to_string() == "0");
  RingPtr b = box22();
  CHECK(P(b, "x[1,1]*x[2,2] - x[1,2]*x[2,1]").to_string() == "-x[1,2]*x[2,1] + x[1,1]*x[2,2]");
  CHECK_THROWS_AS(P(r, "w4"), Error);
  CHECK_THROWS_AS(P(r, "w1 +"), ParseError);
  CHECK_THROWS_AS(P(r, "1/0*w1"), ParseError);
}

TEST_CASE("arithmetic identities on random polynomials") {
  oracle::Gen g(5);
  RingPtr r = w3();
  for (int i = 0; i < 60; ++i) {
    Polynomial a = g.any(r, 3, 4), b = g.any(r, 3, 4), c = g.any(r, 2, 3);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a + (-a) == Polynomial(r));
    // Printing then parsing is the identity.
    CHECK(Polynomial::parse(r, a.to_string()) == a);
    // Evaluation is a ring homomorphism.
    std::vector<Rational> pt{Rational(g.integer(-4, 4)), Rational(2, 3), Rational(g.integer(-4, 4))};
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + c).evaluate(pt) == a.evaluate(pt) + c.evaluate(pt));
    CHECK(a.pow(2) == a * a);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  oracle::Gen g(17);
  RingPtr src = w3();
  RingPtr dst = Ring::make(VarTable::numbered("s", 2), MonomialOrder::lex());
  std::vector<std::optional<Polynomial>> assign{P(dst, "s1 + s2"), P(dst, "s1^2"), P(dst, "2*s2 - 1")};
  for (int i = 0; i < 40; ++i) {
    Polynomial a = g.any(src, 2, 3), b = g.any(src, 2, 3);
    CHECK(substitute(a * b, dst, assign) == substitute(a, dst, assign) * substitute(b, dst, assign));
    CHECK(substitute(a + b, dst, assign) == substitute(a, dst, assign) + substitute(b, dst, assign));
  }
  std::vector<std::optional<Polynomial>> partial{P(dst, "s1"), std::nullopt, P(dst, "s2")};
  CHECK_NOTHROW(substitute(P(src, "w1*w3"), dst, partial));
  try {
    substitute(P(src, "w1*w2"), dst, partial);
    FAIL("expected an error");
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find("w2") != std::string::npos);
  }
}

TEST_CASE("operands from different rings are rejected") {
  Polynomial a = P(w3(), "w1");
  Polynomial b = P(box22(), "x[1,1]");
  CHECK_THROWS_AS(a + b, StructuralError);
  CHECK_THROWS_AS(a * b, StructuralError);
  // Structurally equal rings are interchangeable.
  Polynomial c = P(w3(), "w2");
  CHECK((a + c).to_string() == "w1 + w2");
}

TEST_CASE("monic and sign normalization") {
  RingPtr r = w3();
  Polynomial p = P(r, "-3*w1 + 6*w2");
  CHECK(p.monic().to_string() == "w1 - 2*w2");
  CHECK(p.sign_normalized().to_string() == "3*w1 - 6*w2");
  CHECK(p.is_homogeneous());
  CHECK_FALSE(P(r, "w1 + 1").is_homogeneous());
  CHECK(P(r, "w1^2*w3 + w2").degree() == 3);
}

TEST_CASE("rational matrices: rank, kernel, rref and determinant") {
  RationalMatrix m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(m.rank() == 2);
  auto ker = m.kernel();
  REQUIRE(ker.size() == 1);
  for (std::size_t r = 0; r < 3; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < 3; ++c)
      s += m(r, c) * ker[0][c];
    CHECK(s == 0);
  }
  std::vector<std::size_t> piv;
  RationalMatrix e = m.rref(&piv);
  CHECK(e.rows() == 2);
  CHECK(piv == std::vector<std::size_t>{0, 1});
  CHECK(RationalMatrix::from_rows({{2, 1}, {7, 4}}, 2).determinant() == 1);
  CHECK(m.determinant() == 0);
}

TEST_CASE("polynomial determinant matches the cofactor formula") {
  RingPtr r = w3();
  std::vector<std::vector<Polynomial>> m{{P(r, "w1"), P(r, "w2"), P(r, "0")},
                                         {P(r, "w3"), P(r, "w1"), P(r, "w2")},
                                         {P(r, "1"), P(r, "w3"), P(r, "w1")}};
  // w1*(w1*w1 - w2*w3) - w2*(w3*w1 - w2*1)
  Polynomial expect = P(r, "w1^3 - 2*w1*w2*w3 + w2^2");
  CHECK(determinant(m, r) == expect);
}
