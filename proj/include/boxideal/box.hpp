#pragma once

#include "boxideal/groebner.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boxideal {

/// Positions 1 <= i_j <= r_j. Linear indices enumerate positions in
/// lexicographic order of the tuples (last coordinate fastest).
struct Box {
  std::vector<int> sizes;

  Box() = default;
  explicit Box(std::vector<int> sizes);

  /// "2x3x4"; at least two factors, each >= 1.
  static Box parse(std::string_view spec);
  std::string to_string() const;

  std::size_t dimension() const { return sizes.size(); }
  std::size_t count() const;
  std::vector<int> position(std::size_t linear) const;
  std::size_t linear(std::span<const int> pos) const;
  bool operator==(const Box&) const = default;
};

/// Degree reverse lex with x[1,...,1] the smallest variable.
MonomialOrder box_order();
RingPtr box_ring(const Box& box);

/// Box of variables. Entries are variable positions in `ring`; the generic
/// flavor has entry(k) = k over the ring's x[...] table, the weak flavor may
/// repeat variables.
class BoxMatrix {
public:
  BoxMatrix(Box box, RingPtr ring, std::vector<std::size_t> entries);

  static BoxMatrix generic(const Box& box);
  static BoxMatrix generic(const Box& box, RingPtr ring);

  const Box& box() const { return box_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<std::size_t>& entries() const { return entries_; }
  std::size_t entry(std::size_t linear) const { return entries_.at(linear); }
  std::size_t entry(std::span<const int> pos) const { return entries_.at(box_.linear(pos)); }
  Polynomial entry_poly(std::size_t linear) const { return Polynomial::variable(ring_, entry(linear)); }
  bool injective() const;

private:
  Box box_;
  RingPtr ring_;
  std::vector<std::size_t> entries_;
};

/// One generated minor: positions p < q (linear indices) about `axis`
/// (0-based), normalized so the leading coefficient is +1.
struct Minor {
  std::size_t axis;
  std::size_t first;
  std::size_t second;
  Polynomial poly;
};

/// Nonzero 2x2 minors about one axis, deduplicated, ordered by position pair.
std::vector<Minor> minors(const BoxMatrix& a, std::size_t axis);
/// Union over axes in axis order, deduplicated across axes.
std::vector<Minor> minor_list(const BoxMatrix& a);
/// I_2(A) with generators in minor_list order.
Ideal all_minors(const BoxMatrix& a);

/// A_l: positions with i_l < r_l (0-based axis). Requires r_l >= 2.
BoxMatrix sub_box(const BoxMatrix& a, std::size_t axis);
/// Linear indices of the face B_l: positions with i_l = r_l.
std::vector<std::size_t> face_positions(const Box& box, std::size_t axis);
/// I_l = <I_2(A_l), entries on B_l>. For r_l = 1 the minor part is empty.
Ideal face_ideal(const BoxMatrix& a, std::size_t axis);

/// A 2-D slice of a 3-D box as a matrix of variable positions.
struct EntryMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> vars;  // row-major

  std::size_t at(std::size_t r, std::size_t c) const { return vars[r * cols + c]; }
  bool all_distinct() const;
};

/// x-sections fix i (size r2 x r3), y-sections fix j (r1 x r3), z-sections
/// fix k (r1 x r2).
struct Sections {
  std::vector<EntryMatrix> x;
  std::vector<EntryMatrix> y;
  std::vector<EntryMatrix> z;
};

Sections sections(const BoxMatrix& a);

/// Whether `m` is a Catalecticant Cat(1, n-1; 3) pattern up to renaming:
/// a 3 x C(n+1,2) matrix whose entries repeat exactly as in catalecticant(n)
/// and differ wherever the pattern's indices differ.
bool matches_catalecticant(const EntryMatrix& m);

enum class Verdict { pass, fail, skipped };
const char* to_string(Verdict v);

struct CheckResult {
  Verdict verdict = Verdict::skipped;
  std::string detail;
};

struct WeakBoxReport {
  CheckResult entries_are_variables;  // (a)
  CheckResult corner_intersection;    // (b)
  CheckResult killing_position;       // (c)
  CheckResult prime_sections;         // (d)

  /// No check failed; skipped checks do not count against.
  bool passed() const;
};

struct WeakBoxOptions {
  std::size_t gate_positions = 24;  // (b) is skipped above this
  GbOptions gb;
};

WeakBoxReport weak_box_check(const BoxMatrix& a, const WeakBoxOptions& options = {});

} // namespace boxideal
