#include "boxideal/box.hpp"

#include "boxideal/catalecticant.hpp"
#include "boxideal/errors.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <unordered_set>

namespace boxideal {

Box::Box(std::vector<int> s) : sizes(std::move(s)) {
  if (sizes.size() < 2)
    throw StructuralError("a box needs at least two axes");
  for (int r : sizes)
    if (r < 1)
      throw StructuralError("box sizes must be >= 1");
}

Box Box::parse(std::string_view spec) {
  std::vector<int> sizes;
  std::size_t start = 0;
  while (true) {
    std::size_t end = spec.find('x', start);
    std::string_view part = spec.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || value < 1)
      throw ParseError("malformed box spec '" + std::string(spec) + "': expected sizes like 2x3x4");
    sizes.push_back(value);
    if (end == std::string_view::npos)
      break;
    start = end + 1;
  }
  if (sizes.size() < 2)
    throw ParseError("malformed box spec '" + std::string(spec) + "': need at least two sizes");
  return Box(std::move(sizes));
}

std::string Box::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i)
      out += 'x';
    out += std::to_string(sizes[i]);
  }
  return out;
}

std::size_t Box::count() const {
  std::size_t n = 1;
  for (int r : sizes)
    n *= static_cast<std::size_t>(r);
  return n;
}

std::vector<int> Box::position(std::size_t linear) const {
  std::vector<int> pos(sizes.size());
  for (std::size_t j = sizes.size(); j-- > 0;) {
    pos[j] = static_cast<int>(linear % sizes[j]) + 1;
    linear /= sizes[j];
  }
  return pos;
}

std::size_t Box::linear(std::span<const int> pos) const {
  if (pos.size() != sizes.size())
    throw StructuralError("position has the wrong number of coordinates");
  std::size_t out = 0;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    if (pos[j] < 1 || pos[j] > sizes[j])
      throw StructuralError("position outside the box");
    out = out * sizes[j] + static_cast<std::size_t>(pos[j] - 1);
  }
  return out;
}

MonomialOrder box_order() { return MonomialOrder::degrevlex(VariableRank::first_smallest); }

RingPtr box_ring(const Box& box) { return Ring::make(VarTable::box(box.sizes), box_order()); }

BoxMatrix::BoxMatrix(Box box, RingPtr ring, std::vector<std::size_t> entries)
    : box_(std::move(box)), ring_(std::move(ring)), entries_(std::move(entries)) {
  if (entries_.size() != box_.count())
    throw StructuralError("box matrix needs one entry per position");
  for (auto v : entries_)
    if (v >= ring_->size())
      throw StructuralError("box entry is not a variable of the ring");
}

BoxMatrix BoxMatrix::generic(const Box& box) { return generic(box, box_ring(box)); }

BoxMatrix BoxMatrix::generic(const Box& box, RingPtr ring) {
  std::vector<std::size_t> entries(box.count());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    Variable v = Variable::indexed("x", box.position(k));
    entries[k] = ring->vars().position(v.name());
  }
  return BoxMatrix(box, std::move(ring), std::move(entries));
}

bool BoxMatrix::injective() const {
  std::unordered_set<std::size_t> seen(entries_.begin(), entries_.end());
  return seen.size() == entries_.size();
}

namespace {

void require_axis(const Box& box, std::size_t axis) {
  if (axis >= box.dimension())
    throw StructuralError("axis " + std::to_string(axis + 1) + " out of range for a " +
                          std::to_string(box.dimension()) + "-dimensional box");
}

Polynomial binomial_minor(const BoxMatrix& a, std::size_t p, std::size_t q, std::size_t p2, std::size_t q2) {
  const RingPtr& ring = a.ring();
  Monomial left = Monomial::variable(a.entry(p)) * Monomial::variable(a.entry(q));
  Monomial right = Monomial::variable(a.entry(p2)) * Monomial::variable(a.entry(q2));
  if (left == right)
    return Polynomial(ring);
  return Polynomial::from_terms(ring, {{1, std::move(left)}, {-1, std::move(right)}}).sign_normalized();
}

void collect(const BoxMatrix& a, std::size_t axis, std::unordered_set<std::string>& seen, std::vector<Minor>& out) {
  const Box& box = a.box();
  const std::size_t n = box.count();
  std::vector<std::vector<int>> pos(n);
  for (std::size_t k = 0; k < n; ++k)
    pos[k] = box.position(k);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      if (pos[p][axis] == pos[q][axis])
        continue;
      std::vector<int> p2 = pos[p];
      std::vector<int> q2 = pos[q];
      std::swap(p2[axis], q2[axis]);
      Polynomial m = binomial_minor(a, p, q, box.linear(p2), box.linear(q2));
      if (m.is_zero())
        continue;
      if (!seen.insert(m.to_string()).second)
        continue;
      out.push_back({axis, p, q, std::move(m)});
    }
}

} // namespace

std::vector<Minor> minors(const BoxMatrix& a, std::size_t axis) {
  require_axis(a.box(), axis);
  std::unordered_set<std::string> seen;
  std::vector<Minor> out;
  collect(a, axis, seen, out);
  return out;
}

std::vector<Minor> minor_list(const BoxMatrix& a) {
  std::unordered_set<std::string> seen;
  std::vector<Minor> out;
  for (std::size_t axis = 0; axis < a.box().dimension(); ++axis)
    collect(a, axis, seen, out);
  return out;
}

Ideal all_minors(const BoxMatrix& a) {
  std::vector<Polynomial> gens;
  for (auto& m : minor_list(a))
    gens.push_back(std::move(m.poly));
  return Ideal(a.ring(), std::move(gens));
}

BoxMatrix sub_box(const BoxMatrix& a, std::size_t axis) {
  const Box& box = a.box();
  require_axis(box, axis);
  if (box.sizes[axis] < 2)
    throw StructuralError("sub-box along axis " + std::to_string(axis + 1) + " needs size >= 2");
  std::vector<int> sizes = box.sizes;
  --sizes[axis];
  Box sub(sizes);
  std::vector<std::size_t> entries(sub.count());
  for (std::size_t k = 0; k < entries.size(); ++k)
    entries[k] = a.entry(sub.position(k));
  return BoxMatrix(sub, a.ring(), std::move(entries));
}

std::vector<std::size_t> face_positions(const Box& box, std::size_t axis) {
  require_axis(box, axis);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < box.count(); ++k)
    if (box.position(k)[axis] == box.sizes[axis])
      out.push_back(k);
  return out;
}

Ideal face_ideal(const BoxMatrix& a, std::size_t axis) {
  std::vector<Polynomial> gens;
  if (a.box().sizes[axis] >= 2) {
    BoxMatrix sub = sub_box(a, axis);
    // A 1-dimensional remainder is not a box, but it has no minors either.
    for (auto& m : minor_list(sub))
      gens.push_back(std::move(m.poly));
  }
  std::vector<std::size_t> vars;
  for (auto k : face_positions(a.box(), axis))
    if (std::find(vars.begin(), vars.end(), a.entry(k)) == vars.end())
      vars.push_back(a.entry(k));
  for (auto v : vars)
    gens.push_back(Polynomial::variable(a.ring(), v));
  return Ideal(a.ring(), std::move(gens));
}

bool EntryMatrix::all_distinct() const {
  std::unordered_set<std::size_t> seen(vars.begin(), vars.end());
  return seen.size() == vars.size();
}

Sections sections(const BoxMatrix& a) {
  const Box& box = a.box();
  if (box.dimension() != 3)
    throw StructuralError("sections need a 3-dimensional box");
  const int r1 = box.sizes[0], r2 = box.sizes[1], r3 = box.sizes[2];
  auto at = [&](int i, int j, int k) {
    const int pos[3] = {i, j, k};
    return a.entry(std::span<const int>(pos, 3));
  };
  Sections out;
  for (int i = 1; i <= r1; ++i) {
    EntryMatrix m{static_cast<std::size_t>(r2), static_cast<std::size_t>(r3), {}};
    for (int j = 1; j <= r2; ++j)
      for (int k = 1; k <= r3; ++k)
        m.vars.push_back(at(i, j, k));
    out.x.push_back(std::move(m));
  }
  for (int j = 1; j <= r2; ++j) {
    EntryMatrix m{static_cast<std::size_t>(r1), static_cast<std::size_t>(r3), {}};
    for (int i = 1; i <= r1; ++i)
      for (int k = 1; k <= r3; ++k)
        m.vars.push_back(at(i, j, k));
    out.y.push_back(std::move(m));
  }
  for (int k = 1; k <= r3; ++k) {
    EntryMatrix m{static_cast<std::size_t>(r1), static_cast<std::size_t>(r2), {}};
    for (int i = 1; i <= r1; ++i)
      for (int j = 1; j <= r2; ++j)
        m.vars.push_back(at(i, j, k));
    out.z.push_back(std::move(m));
  }
  return out;
}

bool matches_catalecticant(const EntryMatrix& m) {
  if (m.rows != 3)
    return false;
  int n = 1;
  while (static_cast<std::size_t>(n * (n + 1) / 2) < m.cols)
    ++n;
  if (static_cast<std::size_t>(n * (n + 1) / 2) != m.cols)
    return false;
  const CatalecticantPattern pat = catalecticant(n);
  const std::size_t cells = m.vars.size();
  for (std::size_t a = 0; a < cells; ++a)
    for (std::size_t b = a + 1; b < cells; ++b)
      if ((m.vars[a] == m.vars[b]) != (pat.entries[a] == pat.entries[b]))
        return false;
  return true;
}

const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::pass:
    return "pass";
  case Verdict::fail:
    return "fail";
  case Verdict::skipped:
    return "skipped";
  }
  return "?";
}

bool WeakBoxReport::passed() const {
  for (const auto* c : {&entries_are_variables, &corner_intersection, &killing_position, &prime_sections})
    if (c->verdict == Verdict::fail)
      return false;
  return true;
}

namespace {

std::string position_string(const Box& box, std::size_t linear) {
  std::string out = "(";
  auto pos = box.position(linear);
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(pos[i]);
  }
  return out + ")";
}

CheckResult check_sections(const BoxMatrix& a) {
  const Sections s = sections(a);
  auto distinct_family = [](const std::vector<EntryMatrix>& family, const char* name) -> std::optional<std::string> {
    for (std::size_t i = 0; i < family.size(); ++i)
      if (!family[i].all_distinct())
        return std::string(name) + "-section " + std::to_string(i + 1) + " repeats a variable";
    return std::nullopt;
  };
  if (auto bad = distinct_family(s.y, "y"))
    return {Verdict::fail, *bad};
  if (auto bad = distinct_family(s.z, "z"))
    return {Verdict::fail, *bad};
  std::size_t generic = 0, cat = 0;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    if (s.x[i].all_distinct())
      ++generic;
    else if (matches_catalecticant(s.x[i]))
      ++cat;
    else
      return {Verdict::fail, "x-section " + std::to_string(i + 1) + " is neither generic nor a Catalecticant pattern"};
  }
  std::string detail = "y/z-sections generic; x-sections: " + std::to_string(generic) + " generic, " +
                       std::to_string(cat) + " Catalecticant";
  return {Verdict::pass, detail};
}

} // namespace

WeakBoxReport weak_box_check(const BoxMatrix& a, const WeakBoxOptions& options) {
  const Box& box = a.box();
  if (box.dimension() != 3)
    throw StructuralError("weak box check needs a 3-dimensional box");
  WeakBoxReport report;

  // (a) Entries are variables by construction; record how many distinct ones.
  {
    std::unordered_set<std::size_t> distinct(a.entries().begin(), a.entries().end());
    report.entries_are_variables = {Verdict::pass, std::to_string(distinct.size()) + " distinct variables over " +
                                                       std::to_string(box.count()) + " positions"};
  }

  const Ideal minors_ideal = all_minors(a);

  // (b) <I_2(A), corner> = intersection of the I_l.
  if (box.count() > options.gate_positions) {
    report.corner_intersection = {Verdict::skipped, std::to_string(box.count()) + " positions exceed the gate of " +
                                                        std::to_string(options.gate_positions)};
  } else {
    try {
      std::vector<Polynomial> lhs_gens = minors_ideal.generators();
      lhs_gens.push_back(a.entry_poly(box.count() - 1));
      Ideal lhs(a.ring(), std::move(lhs_gens));
      std::vector<Ideal> faces;
      for (std::size_t l = 0; l < 3; ++l)
        faces.push_back(face_ideal(a, l));
      Ideal rhs = intersect(faces, options.gb);
      if (same_ideal(lhs, rhs, options.gb))
        report.corner_intersection = {Verdict::pass, "equal by mutual membership"};
      else
        report.corner_intersection = {Verdict::fail, "ideals differ"};
    } catch (const BudgetExhausted& e) {
      report.corner_intersection = {Verdict::skipped, std::string("budget exhausted: ") + e.what()};
    }
  }

  // (c) A position whose variable alone survives and kills every minor.
  {
    report.killing_position = {Verdict::fail, "no position kills I_2(A)"};
    std::vector<std::size_t> tried;
    for (std::size_t k = 0; k < box.count(); ++k) {
      const std::size_t v = a.entry(k);
      if (std::find(tried.begin(), tried.end(), v) != tried.end())
        continue;
      tried.push_back(v);
      std::vector<std::optional<Polynomial>> assign(a.ring()->size(), Polynomial(a.ring()));
      assign[v] = Polynomial::variable(a.ring(), v);
      bool kills = true;
      for (const auto& g : minors_ideal.generators())
        if (!substitute(g, a.ring(), assign).is_zero()) {
          kills = false;
          break;
        }
      if (kills) {
        report.killing_position = {Verdict::pass, "position " + position_string(box, k) + " (" +
                                                      a.ring()->vars().name(v) + ")"};
        break;
      }
    }
  }

  // (d) Structural classification of the sections.
  report.prime_sections = check_sections(a);
  return report;
}

} // namespace boxideal
