#include "boxideal/var_table.hpp"

#include "boxideal/errors.hpp"

namespace boxideal {

std::string Variable::name() const {
  if (index.empty())
    return base;
  std::string out = base + "[";
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(index[i]);
  }
  out += ']';
  return out;
}

VarTable::VarTable(std::vector<Variable> vars) : vars_(std::move(vars)) {
  by_name_.reserve(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto [it, inserted] = by_name_.emplace(vars_[i].name(), i);
    if (!inserted)
      throw StructuralError("duplicate variable name '" + it->first + "'");
  }
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end())
    return std::nullopt;
  return it->second;
}

std::size_t VarTable::position(std::string_view name) const {
  if (auto pos = find(name))
    return *pos;
  throw StructuralError("unknown variable '" + std::string(name) + "'");
}

VarTable VarTable::box(const std::vector<int>& sizes, const std::string& base) {
  std::vector<Variable> vars;
  if (sizes.empty())
    return VarTable{};
  std::vector<int> idx(sizes.size(), 1);
  for (int s : sizes)
    if (s < 1)
      return VarTable{};
  while (true) {
    vars.push_back(Variable::indexed(base, idx));
    std::size_t k = sizes.size();
    while (k > 0) {
      --k;
      if (idx[k] < sizes[k]) {
        ++idx[k];
        break;
      }
      idx[k] = 1;
      if (k == 0)
        return VarTable(std::move(vars));
    }
  }
}

VarTable VarTable::numbered(const std::string& prefix, std::size_t count) {
  std::vector<Variable> vars;
  vars.reserve(count);
  for (std::size_t i = 1; i <= count; ++i)
    vars.push_back(Variable::plain(prefix + std::to_string(i)));
  return VarTable(std::move(vars));
}

VarTable VarTable::concat(const VarTable& other) const {
  std::vector<Variable> vars = vars_;
  vars.insert(vars.end(), other.vars_.begin(), other.vars_.end());
  return VarTable(std::move(vars));
}

} // namespace boxideal
