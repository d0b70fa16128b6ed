#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace boxideal {

/// A variable descriptor: either a multi-index variable such as `x[1,2,1]`
/// or `y[2,3]`, or a plain variable such as `w1`, `z4`, `t`, `e1`.
struct Variable {
  std::string base;
  std::vector<int> index;  // empty for plain variables

  static Variable plain(std::string name) { return {std::move(name), {}}; }
  static Variable indexed(std::string base, std::vector<int> index) {
    return {std::move(base), std::move(index)};
  }

  std::string name() const;
  bool operator==(const Variable&) const = default;
};

/// Ordered list of variables; position is the variable's identity inside a
/// ring. Names are unique.
class VarTable {
public:
  VarTable() = default;
  explicit VarTable(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t pos) const { return vars_.at(pos); }
  const std::vector<Variable>& variables() const { return vars_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t position(std::string_view name) const;  // throws if unknown
  std::string name(std::size_t pos) const { return vars_.at(pos).name(); }

  bool operator==(const VarTable& other) const { return vars_ == other.vars_; }

  /// All multi-index variables `base[i1,...,in]` with 1 <= ij <= sizes[j],
  /// in lexicographic order of the index tuples.
  static VarTable box(const std::vector<int>& sizes, const std::string& base = "x");

  /// Plain variables `prefix1 ... prefixN`.
  static VarTable numbered(const std::string& prefix, std::size_t count);

  VarTable concat(const VarTable& other) const;

private:
  std::vector<Variable> vars_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

} // namespace boxideal
