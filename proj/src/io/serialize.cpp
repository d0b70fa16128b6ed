#include "boxideal/serialize.hpp"

#include "boxideal/errors.hpp"

#include <cctype>

namespace boxideal {

std::string rational_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(mpz_class(text));
    mpz_class den(text.substr(slash + 1));
    if (den == 0)
      throw ParseError("zero denominator in '" + text + "'");
    Rational out{mpz_class(text.substr(0, slash)), den};
    out.canonicalize();
    return out;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + text + "'");
  }
}

Variable parse_variable(const std::string& name) {
  std::size_t open = name.find('[');
  if (open == std::string::npos) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
      throw ParseError("malformed variable name '" + name + "'");
    return Variable::plain(name);
  }
  if (open == 0 || name.back() != ']')
    throw ParseError("malformed variable name '" + name + "'");
  std::vector<int> index;
  std::string body = name.substr(open + 1, name.size() - open - 2);
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string part = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed index in variable name '" + name + "'");
    index.push_back(std::stoi(part));
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return Variable::indexed(name.substr(0, open), std::move(index));
}

json ideal_to_json(const Ideal& ideal) {
  json vars = json::array();
  for (const auto& v : ideal.ring()->vars().variables())
    vars.push_back(v.name());
  json gens = json::array();
  for (const auto& g : ideal.generators())
    gens.push_back(g.to_string());
  json out;
  out["variables"] = std::move(vars);
  out["order"] = ideal.ring()->order().describe();
  out["generators"] = std::move(gens);
  out["groebner"] = ideal.is_groebner();
  return out;
}

Ideal ideal_from_json(const json& j) {
  try {
    std::vector<Variable> vars;
    for (const auto& name : j.at("variables"))
      vars.push_back(parse_variable(name.get<std::string>()));
    RingPtr ring = Ring::make(VarTable(std::move(vars)), MonomialOrder::parse(j.at("order").get<std::string>()));
    std::vector<Polynomial> gens;
    for (const auto& g : j.at("generators"))
      gens.push_back(Polynomial::parse(ring, g.get<std::string>()));
    // A claimed Groebner basis is re-checked rather than trusted.
    if (j.value("groebner", false)) {
      auto reduced = reduce_basis(gens);
      if (check_groebner(reduced).is_groebner && reduced == gens)
        return Ideal::reduced_basis(ring, std::move(reduced));
      throw ParseError("ideal is flagged as a reduced Groebner basis but is not one");
    }
    return Ideal(ring, std::move(gens));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed ideal JSON: ") + e.what());
  }
}

json tensor_to_json(const ConcreteTensor& t) {
  json entries = json::array();
  for (std::size_t k = 0; k < t.values.size(); ++k)
    if (t.values[k] != 0)
      entries.push_back({{"pos", t.box.position(k)}, {"value", rational_string(t.values[k])}});
  json out;
  out["sizes"] = t.box.sizes;
  out["entries"] = std::move(entries);
  return out;
}

ConcreteTensor tensor_from_json(const json& j) {
  try {
    ConcreteTensor t{Box(j.at("sizes").get<std::vector<int>>())};
    for (const auto& e : j.at("entries")) {
      auto pos = e.at("pos").get<std::vector<int>>();
      const auto& v = e.at("value");
      t.at(pos) = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
    }
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed tensor JSON: ") + e.what());
  } catch (const StructuralError& e) {
    throw ParseError(std::string("malformed tensor JSON: ") + e.what());
  }
}

json weak_box_to_json(const WeakBoxReport& r) {
  auto one = [](const CheckResult& c) { return json{{"verdict", to_string(c.verdict)}, {"detail", c.detail}}; };
  json out;
  out["entries_are_variables"] = one(r.entries_are_variables);
  out["corner_intersection"] = one(r.corner_intersection);
  out["killing_position"] = one(r.killing_position);
  out["prime_sections"] = one(r.prime_sections);
  out["passed"] = r.passed();
  return out;
}

json checks_to_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks)
    out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

json surface_to_json(const SurfaceReport& r) {
  json out;
  out["complete"] = r.complete;
  if (!r.complete)
    out["partial_reason"] = r.partial_reason;
  out["dimension"] = r.dimension ? json(*r.dimension) : json(nullptr);
  out["expected_dimension"] = r.expected_dimension;
  out["degree"] = r.degree ? json(r.degree->get_str()) : json(nullptr);
  out["expected_degree"] = std::to_string(r.expected_degree);
  out["groebner_basis_size"] = r.gb_size;
  out["linear_relations_rank"] = r.linear_rank;
  out["expected_linear_relations"] = r.expected_linear;
  out["ambient_variables"] = r.ambient;
  out["expected_ambient_variables"] = r.expected_ambient;
  out["degree_t_dimension"] = r.degree_t_dimension;
  out["expected_degree_t_dimension"] = r.expected_degree_t_dimension;
  out["passed"] = r.passed();
  return out;
}

json model_to_json(const BlowupModel& m) {
  json out;
  out["d"] = m.d;
  out["n"] = m.n;
  out["t"] = m.t;
  out["p"] = m.p;
  json pts = json::array();
  for (const auto& p : m.points.points)
    pts.push_back({rational_string(p[0]), rational_string(p[1]), rational_string(p[2])});
  out["points"] = {{"seed", m.points.seed}, {"attempts", m.points.attempts}, {"coordinates", std::move(pts)}};
  json F = json::array();
  for (const auto& f : m.hb.F)
    F.push_back(f.to_string());
  out["F"] = std::move(F);
  json L = json::array();
  for (const auto& row : m.hb.L) {
    json r = json::array();
    for (const auto& e : row)
      r.push_back(e.to_string());
    L.push_back(std::move(r));
  }
  out["L"] = std::move(L);
  out["rho"] = rational_string(m.hb.rho);
  json z = json::array();
  for (const auto& a : m.rel.z_monomials)
    z.push_back(a);
  out["z_exponents"] = std::move(z);
  json rel = json::array();
  for (const auto& r : m.rel.relations)
    rel.push_back(r.to_string());
  out["relations"] = std::move(rel);
  json E = json::array();
  for (std::size_t r = 0; r < m.rel.E.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.rel.E.cols(); ++c)
      row.push_back(rational_string(m.rel.E(r, c)));
    E.push_back(std::move(row));
  }
  out["E"] = std::move(E);
  out["E_rank"] = m.rel.rank;
  json cat = json::array();
  for (std::size_t r = 0; r < m.cat.rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cat.cols; ++c)
      row.push_back("z" + std::to_string(m.cat.at(r, c)));
    cat.push_back(std::move(row));
  }
  out["catalecticant"] = std::move(cat);
  out["box"] = m.box.box().to_string();
  out["ideal"] = ideal_to_json(m.ideal);
  return out;
}

} // namespace boxideal
