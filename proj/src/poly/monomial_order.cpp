#include "boxideal/monomial_order.hpp"

#include "boxideal/errors.hpp"

#include <algorithm>
#include <optional>

namespace boxideal {

namespace {

using Powers = std::span<const VarPower>;

struct Diff {
  std::uint32_t ea;
  std::uint32_t eb;
};

std::uint32_t degree_of(Powers p) {
  std::uint32_t d = 0;
  for (const auto& vp : p)
    d += vp.exp;
  return d;
}

// Exponents at the smallest variable index where a and b differ.
std::optional<Diff> first_diff(Powers a, Powers b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].var == b[j].var) {
      if (a[i].exp != b[j].exp)
        return Diff{a[i].exp, b[j].exp};
      ++i;
      ++j;
    } else if (a[i].var < b[j].var) {
      return Diff{a[i].exp, 0};
    } else {
      return Diff{0, b[j].exp};
    }
  }
  if (i < a.size())
    return Diff{a[i].exp, 0};
  if (j < b.size())
    return Diff{0, b[j].exp};
  return std::nullopt;
}

// Exponents at the largest variable index where a and b differ.
std::optional<Diff> last_diff(Powers a, Powers b) {
  std::size_t i = a.size(), j = b.size();
  while (i > 0 && j > 0) {
    const auto& pa = a[i - 1];
    const auto& pb = b[j - 1];
    if (pa.var == pb.var) {
      if (pa.exp != pb.exp)
        return Diff{pa.exp, pb.exp};
      --i;
      --j;
    } else if (pa.var > pb.var) {
      return Diff{pa.exp, 0};
    } else {
      return Diff{0, pb.exp};
    }
  }
  if (i > 0)
    return Diff{a[i - 1].exp, 0};
  if (j > 0)
    return Diff{0, b[j - 1].exp};
  return std::nullopt;
}

std::strong_ordering cmp_lex(Powers a, Powers b, VariableRank rank) {
  auto d = rank == VariableRank::first_largest ? first_diff(a, b) : last_diff(a, b);
  if (!d)
    return std::strong_ordering::equal;
  return d->ea <=> d->eb;
}

std::strong_ordering cmp_degrevlex(Powers a, Powers b, VariableRank rank) {
  if (auto c = degree_of(a) <=> degree_of(b); c != 0)
    return c;
  // Larger exponent in the smallest differing variable means smaller.
  auto d = rank == VariableRank::first_largest ? last_diff(a, b) : first_diff(a, b);
  if (!d)
    return std::strong_ordering::equal;
  return d->eb <=> d->ea;
}

std::strong_ordering cmp_inner(Powers a, Powers b, OrderKind kind, VariableRank rank) {
  return kind == OrderKind::lex ? cmp_lex(a, b, rank) : cmp_degrevlex(a, b, rank);
}

std::size_t split_at(Powers p, std::size_t var) {
  auto it = std::lower_bound(p.begin(), p.end(), var,
                             [](const VarPower& vp, std::size_t v) { return vp.var < v; });
  return static_cast<std::size_t>(it - p.begin());
}

const char* kind_name(OrderKind k) {
  switch (k) {
  case OrderKind::lex:
    return "lex";
  case OrderKind::degrevlex:
    return "degrevlex";
  case OrderKind::block:
    return "block";
  }
  return "?";
}

} // namespace

MonomialOrder MonomialOrder::lex(VariableRank rank) {
  return {OrderKind::lex, OrderKind::lex, rank, 0};
}

MonomialOrder MonomialOrder::degrevlex(VariableRank rank) {
  return {OrderKind::degrevlex, OrderKind::degrevlex, rank, 0};
}

MonomialOrder MonomialOrder::block(std::size_t eliminated, OrderKind inner, VariableRank rank) {
  if (inner == OrderKind::block)
    throw StructuralError("block order needs lex or degrevlex inside each block");
  return {OrderKind::block, inner, rank, eliminated};
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  Powers pa = a.powers();
  Powers pb = b.powers();
  switch (kind_) {
  case OrderKind::lex:
    return cmp_lex(pa, pb, rank_);
  case OrderKind::degrevlex:
    return cmp_degrevlex(pa, pb, rank_);
  case OrderKind::block: {
    std::size_t ka = split_at(pa, block_);
    std::size_t kb = split_at(pb, block_);
    if (auto c = cmp_inner(pa.first(ka), pb.first(kb), inner_, rank_); c != 0)
      return c;
    return cmp_inner(pa.subspan(ka), pb.subspan(kb), inner_, rank_);
  }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
  std::string out;
  if (kind_ == OrderKind::block)
    out = "block(" + std::to_string(block_) + "," + kind_name(inner_) + ")";
  else
    out = kind_name(kind_);
  out += rank_ == VariableRank::first_largest ? "/first_largest" : "/first_smallest";
  return out;
}

MonomialOrder MonomialOrder::parse(const std::string& descriptor) {
  auto slash = descriptor.find('/');
  if (slash == std::string::npos)
    throw ParseError("order descriptor '" + descriptor + "' lacks a /rank suffix");
  std::string head = descriptor.substr(0, slash);
  std::string tail = descriptor.substr(slash + 1);
  VariableRank rank;
  if (tail == "first_largest")
    rank = VariableRank::first_largest;
  else if (tail == "first_smallest")
    rank = VariableRank::first_smallest;
  else
    throw ParseError("unknown variable rank '" + tail + "'");
  if (head == "lex")
    return lex(rank);
  if (head == "degrevlex")
    return degrevlex(rank);
  if (head.starts_with("block(") && head.ends_with(")")) {
    std::string body = head.substr(6, head.size() - 7);
    auto comma = body.find(',');
    if (comma == std::string::npos)
      throw ParseError("malformed block descriptor '" + head + "'");
    std::size_t k = std::stoul(body.substr(0, comma));
    std::string inner = body.substr(comma + 1);
    if (inner == "lex")
      return block(k, OrderKind::lex, rank);
    if (inner == "degrevlex")
      return block(k, OrderKind::degrevlex, rank);
  }
  throw ParseError("unknown monomial order '" + head + "'");
}

} // namespace boxideal
