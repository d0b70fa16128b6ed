#include "boxideal/polynomial.hpp"

#include "boxideal/errors.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace boxideal {

Ring::Ring(VarTable vars, MonomialOrder order) : vars_(std::move(vars)), order_(order) {}

RingPtr Ring::make(VarTable vars, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(vars), order);
}

std::strong_ordering Ring::compare(const Monomial& a, const Monomial& b) const {
  if (a.span_end() > size() || b.span_end() > size())
    throw StructuralError("monomial uses a variable outside the ring's table");
  return order_.compare(a, b);
}

std::string Ring::format(const Monomial& m) const {
  std::string out;
  for (const auto& p : m.powers()) {
    if (!out.empty())
      out += '*';
    out += vars_.name(p.var);
    if (p.exp > 1)
      out += "^" + std::to_string(p.exp);
  }
  return out.empty() ? "1" : out;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
  if (!same_ring(a, b))
    throw StructuralError(std::string(what) + ": operands belong to different rings");
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0)
    p.terms_.push_back({c, Monomial{}});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t pos) {
  if (pos >= ring->size())
    throw StructuralError("variable position out of range");
  Polynomial p(std::move(ring));
  p.terms_.push_back({Rational(1), Monomial::variable(pos)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  std::size_t pos = ring->vars().position(name);
  return variable(std::move(ring), pos);
}

Polynomial Polynomial::term(RingPtr ring, const Rational& c, Monomial m) {
  if (m.span_end() > ring->size())
    throw StructuralError("monomial uses a variable outside the ring's table");
  Polynomial p(std::move(ring));
  if (c != 0)
    p.terms_.push_back({c, std::move(m)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& ord = ring->order();
  for (const auto& t : terms)
    if (t.mono.span_end() > ring->size())
      throw StructuralError("monomial uses a variable outside the ring's table");
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coeff += t.coeff;
    else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0)
        p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0)
    p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty())
    throw StructuralError("the zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_)
    d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree())
      return false;
  return true;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

bool Polynomial::uses_variable(std::size_t pos) const {
  for (const auto& t : terms_)
    if (t.mono.exponent(pos) != 0)
      return true;
  return false;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_)
    t.coeff = -t.coeff;
  return out;
}

Polynomial add_scaled(const Polynomial& a, const Rational& c, const Monomial& m, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring(), "add");
  if (c == 0 || b.is_zero())
    return a;
  const MonomialOrder& ord = a.ring()->order();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::vector<Term> out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  const bool shift = !m.is_one();
  Rational tmp;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size()) {
      out.push_back(ta[i++]);
      continue;
    }
    Monomial mb = shift ? tb[j].mono * m : tb[j].mono;
    if (i == ta.size()) {
      out.push_back({c * tb[j].coeff, std::move(mb)});
      ++j;
      continue;
    }
    auto cmp = ord.compare(ta[i].mono, mb);
    if (cmp > 0) {
      out.push_back(ta[i++]);
    } else if (cmp < 0) {
      out.push_back({c * tb[j].coeff, std::move(mb)});
      ++j;
    } else {
      tmp = c * tb[j].coeff;
      tmp += ta[i].coeff;
      if (tmp != 0)
        out.push_back({tmp, std::move(mb)});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_sorted_terms(a.ring(), std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  *this = add_scaled(*this, Rational(1), Monomial{}, other);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  *this = add_scaled(*this, Rational(-1), Monomial{}, other);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring(), "multiply");
  if (a.is_zero() || b.is_zero())
    return Polynomial(a.ring());
  if (a.size() == 1)
    return b.mul_term(a.terms()[0].coeff, a.terms()[0].mono);
  if (b.size() == 1)
    return a.mul_term(b.terms()[0].coeff, b.terms()[0].mono);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      prod.push_back({ta.coeff * tb.coeff, ta.mono * tb.mono});
  return Polynomial::from_terms(a.ring(), std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0)
    return Polynomial(ring_);
  Polynomial out = *this;
  for (auto& t : out.terms_)
    t.coeff *= c;
  return out;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  if (c == 0)
    return Polynomial(ring_);
  if (m.span_end() > ring_->size())
    throw StructuralError("monomial uses a variable outside the ring's table");
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order.
  for (const auto& t : terms_)
    out.terms_.push_back({t.coeff * c, t.mono * m});
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u)
      result = result * base;
    e >>= 1u;
    if (e)
      base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero())
    return *this;
  Rational inv = 1 / leading_coeff();
  return scaled(inv);
}

Polynomial Polynomial::sign_normalized() const {
  if (is_zero() || leading_coeff() > 0)
    return *this;
  return -*this;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() < ring_->size())
    throw StructuralError("evaluation point has fewer coordinates than the ring has variables");
  Rational sum = 0;
  Rational prod;
  for (const auto& t : terms_) {
    prod = t.coeff;
    for (const auto& p : t.mono.powers())
      for (std::uint32_t k = 0; k < p.exp; ++k)
        prod *= point[p.var];
    sum += prod;
  }
  return sum;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_) || terms_.size() != other.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != other.terms_[i].coeff || !(terms_[i].mono == other.terms_[i].mono))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Text form

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    Rational mag = abs(t.coeff);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1)
      out += mag.get_str() + "*";
    out += ring_->format(t.mono);
  }
  return out;
}

namespace {

class PolyParser {
public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_space();
    if (at_end())
      fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = parse_term();
      if (sign < 0)
        t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_space();
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

private:
  Term parse_term() {
    Rational coeff = 1;
    std::vector<VarPower> powers;
    while (true) {
      skip_space();
      if (at_end())
        fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        std::size_t var = parse_variable();
        std::uint32_t exp = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          exp = static_cast<std::uint32_t>(parse_uint());
        }
        powers.push_back({static_cast<std::uint32_t>(var), exp});
      } else {
        fail("unexpected character");
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {coeff, Monomial::from_powers(std::move(powers))};
  }

  Rational parse_number() {
    std::string num = digits();
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      std::string den = digits();
      const mpz_class d(den);
      if (d == 0)
        fail("zero denominator");
      Rational r{mpz_class(num), d};
      r.canonicalize();
      return r;
    }
    return Rational(mpz_class(num));
  }

  std::size_t parse_variable() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (!at_end() && peek() == '[') {
      ++pos_;
      name += '[';
      bool first = true;
      while (true) {
        skip_space();
        if (!first) {
          if (at_end())
            fail("unterminated index");
          if (peek() == ']')
            break;
          if (peek() != ',')
            fail("expected ',' or ']'");
          ++pos_;
          name += ',';
          skip_space();
        }
        first = false;
        name += std::to_string(parse_uint());
      }
      ++pos_;
      name += ']';
    }
    auto found = ring_->vars().find(name);
    if (!found)
      throw ParseError("unknown variable '" + name + "'");
    return *found;
  }

  unsigned long parse_uint() {
    std::string d = digits();
    return std::stoul(d);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  return PolyParser(ring, text).run();
}

// ---------------------------------------------------------------------------

Polynomial substitute(const Polynomial& p, const RingPtr& target,
                      std::span<const std::optional<Polynomial>> assignment) {
  const std::size_t nvars = p.ring()->size();
  for (const auto& t : p.terms())
    for (const auto& vp : t.mono.powers())
      if (vp.var >= assignment.size() || !assignment[vp.var])
        throw StructuralError("substitute: no assignment for variable '" +
                              p.ring()->vars().name(vp.var) + "'");
  for (std::size_t v = 0; v < std::min(nvars, assignment.size()); ++v)
    if (assignment[v])
      require_same_ring(assignment[v]->ring(), target, "substitute");

  // Cache powers of each image polynomial.
  std::unordered_map<std::uint64_t, Polynomial> power_cache;
  auto power = [&](std::uint32_t var, std::uint32_t e) -> const Polynomial& {
    std::uint64_t key = (std::uint64_t{var} << 32) | e;
    auto it = power_cache.find(key);
    if (it != power_cache.end())
      return it->second;
    return power_cache.emplace(key, assignment[var]->pow(e)).first->second;
  };

  std::vector<Term> acc;
  for (const auto& t : p.terms()) {
    Polynomial image = Polynomial::constant(target, t.coeff);
    for (const auto& vp : t.mono.powers())
      image = image * power(vp.var, vp.exp);
    for (const auto& it : image.terms())
      acc.push_back(it);
  }
  return Polynomial::from_terms(target, std::move(acc));
}

Polynomial remap(const Polynomial& p, const RingPtr& target, std::span<const std::size_t> var_map) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<VarPower> powers;
    for (const auto& vp : t.mono.powers()) {
      if (vp.var >= var_map.size() || var_map[vp.var] >= target->size())
        throw StructuralError("remap: variable '" + p.ring()->vars().name(vp.var) +
                              "' has no image in the target ring");
      powers.push_back({static_cast<std::uint32_t>(var_map[vp.var]), vp.exp});
    }
    out.push_back({t.coeff, Monomial::from_powers(std::move(powers))});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial rebase(const Polynomial& p, const RingPtr& target) {
  if (!(p.ring()->vars() == target->vars()))
    throw StructuralError("rebase: variable tables differ");
  return Polynomial::from_terms(target, p.terms());
}

} // namespace boxideal
