#include "boxideal/monomial.hpp"

#include <algorithm>

namespace boxideal {

void Monomial::finish() {
  degree_ = 0;
  mask_ = 0;
  for (const auto& p : powers_) {
    degree_ += p.exp;
    mask_ |= std::uint64_t{1} << (p.var & 63);
  }
}

Monomial Monomial::variable(std::size_t var, std::uint32_t exp) {
  Monomial m;
  if (exp > 0)
    m.powers_.push_back({static_cast<std::uint32_t>(var), exp});
  m.finish();
  return m;
}

Monomial Monomial::from_powers(std::vector<VarPower> powers) {
  std::sort(powers.begin(), powers.end(),
            [](const VarPower& a, const VarPower& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& p : powers) {
    if (p.exp == 0)
      continue;
    if (!m.powers_.empty() && m.powers_.back().var == p.var)
      m.powers_.back().exp += p.exp;
    else
      m.powers_.push_back(p);
  }
  m.finish();
  return m;
}

Monomial Monomial::from_dense(std::span<const std::uint32_t> exponents) {
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0)
      m.powers_.push_back({static_cast<std::uint32_t>(i), exponents[i]});
  m.finish();
  return m;
}

std::uint32_t Monomial::exponent(std::size_t var) const {
  auto it = std::lower_bound(powers_.begin(), powers_.end(), var,
                             [](const VarPower& p, std::size_t v) { return p.var < v; });
  return (it != powers_.end() && it->var == var) ? it->exp : 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_ || (mask_ & ~other.mask_) != 0)
    return false;
  auto it = other.powers_.begin();
  const auto end = other.powers_.end();
  for (const auto& p : powers_) {
    while (it != end && it->var < p.var)
      ++it;
    if (it == end || it->var != p.var || it->exp < p.exp)
      return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  auto it = divisor.powers_.begin();
  for (const auto& p : powers_) {
    std::uint32_t e = p.exp;
    if (it != divisor.powers_.end() && it->var == p.var) {
      e -= it->exp;
      ++it;
    }
    if (e)
      out.powers_.push_back({p.var, e});
  }
  out.finish();
  return out;
}

namespace {

template <typename Combine>
Monomial merge(const Monomial& a, const Monomial& b, Combine combine, bool keep_unpaired) {
  std::vector<VarPower> out;
  auto pa = a.powers();
  auto pb = b.powers();
  std::size_t i = 0, j = 0;
  while (i < pa.size() || j < pb.size()) {
    if (j == pb.size() || (i < pa.size() && pa[i].var < pb[j].var)) {
      if (keep_unpaired)
        out.push_back(pa[i]);
      ++i;
    } else if (i == pa.size() || pb[j].var < pa[i].var) {
      if (keep_unpaired)
        out.push_back(pb[j]);
      ++j;
    } else {
      out.push_back({pa[i].var, combine(pa[i].exp, pb[j].exp)});
      ++i;
      ++j;
    }
  }
  return Monomial::from_powers(std::move(out));
}

} // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.is_one())
    return b;
  if (b.is_one())
    return a;
  Monomial out;
  auto pa = a.powers();
  auto pb = b.powers();
  std::size_t i = 0, j = 0;
  while (i < pa.size() || j < pb.size()) {
    if (j == pb.size() || (i < pa.size() && pa[i].var < pb[j].var))
      out.powers_.push_back(pa[i++]);
    else if (i == pa.size() || pb[j].var < pa[i].var)
      out.powers_.push_back(pb[j++]);
    else {
      out.powers_.push_back({pa[i].var, pa[i].exp + pb[j].exp});
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  out.mask_ = a.mask_ | b.mask_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return merge(a, b, [](std::uint32_t x, std::uint32_t y) { return std::max(x, y); }, true);
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return merge(a, b, [](std::uint32_t x, std::uint32_t y) { return std::min(x, y); }, false);
}

bool coprime(const Monomial& a, const Monomial& b) {
  auto pa = a.powers();
  auto pb = b.powers();
  std::size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    if (pa[i].var == pb[j].var)
      return false;
    if (pa[i].var < pb[j].var)
      ++i;
    else
      ++j;
  }
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& p : powers_) {
    h ^= (std::size_t{p.var} << 20) ^ p.exp;
    h *= 0x100000001b3ull;
  }
  return h;
}

} // namespace boxideal
