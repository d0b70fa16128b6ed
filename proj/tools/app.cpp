#include "app.hpp"

#include "boxideal/blowup.hpp"
#include "boxideal/box.hpp"
#include "boxideal/errors.hpp"
#include "boxideal/hilbert.hpp"
#include "boxideal/segre.hpp"
#include "boxideal/serialize.hpp"

#include <fstream>
#include <sstream>

namespace boxideal::cli {

namespace {

GbOptions gb_options(const RunConfig& c) {
  GbOptions gb;
  gb.max_spairs = c.budget_spairs;
  gb.max_terms = c.max_terms;
  return gb;
}

json header(const RunConfig& c) {
  json out;
  out["schema"] = 1;
  out["command"] = c.command;
  return out;
}

struct Outcome {
  json body;
  int code = exit_ok;
};

Outcome cmd_minors(const RunConfig& c) {
  BoxMatrix a = BoxMatrix::generic(Box::parse(c.target));
  json out = header(c);
  out["box"] = a.box().to_string();
  json per_axis = json::array();
  for (std::size_t l = 0; l < a.box().dimension(); ++l)
    per_axis.push_back(minors(a, l).size());
  out["per_axis"] = std::move(per_axis);
  Ideal i2 = all_minors(a);
  out["count"] = i2.generators().size();
  out["ideal"] = ideal_to_json(i2);
  return {std::move(out), exit_ok};
}

Outcome cmd_gb_verify(const RunConfig& c) {
  BoxMatrix a = BoxMatrix::generic(Box::parse(c.target));
  std::vector<Polynomial> gens = all_minors(a).generators();
  if (c.mutate && !gens.empty()) {
    // Flip the sign of the trailing term of the first generator.
    std::vector<Term> terms = gens.front().terms();
    terms.back().coeff = -terms.back().coeff;
    gens.front() = Polynomial::from_terms(a.ring(), std::move(terms));
  }
  GroebnerCheck chk = check_groebner(gens, gb_options(c));
  json out = header(c);
  out["box"] = a.box().to_string();
  out["mutated"] = c.mutate;
  out["order"] = a.ring()->order().describe();
  out["generators"] = gens.size();
  out["pairs_total"] = chk.pairs_total;
  out["coprime_skipped"] = chk.coprime_skipped;
  out["pairs_reduced"] = chk.pairs_reduced;
  out["is_groebner"] = chk.is_groebner;
  if (chk.certificate)
    out["certificate"] = {{"first", gens[chk.certificate->first].to_string()},
                          {"second", gens[chk.certificate->second].to_string()},
                          {"remainder", chk.certificate->remainder.to_string()}};
  else
    out["certificate"] = nullptr;
  out["passed"] = chk.is_groebner;
  return {std::move(out), chk.is_groebner ? exit_ok : exit_check_failed};
}

Outcome cmd_hilbert(const RunConfig& c) {
  BoxMatrix a = BoxMatrix::generic(Box::parse(c.target));
  const Ideal basis = buchberger(all_minors(a), gb_options(c));
  json rows = json::array();
  bool agree = true;
  for (unsigned t = 0; t <= c.tmax; ++t) {
    HilbertCounts f = hilbert_formula(a.box().sizes, t);
    HilbertSample s = standard_monomial_count(basis, t);
    const bool ok = f.ideal_dim == s.ideal_dim && f.quotient_dim == s.quotient_dim;
    agree = agree && ok;
    rows.push_back({{"t", t},
                    {"formula_ideal", f.ideal_dim.get_str()},
                    {"formula_quotient", f.quotient_dim.get_str()},
                    {"enumerated_ideal", s.ideal_dim.get_str()},
                    {"enumerated_quotient", s.quotient_dim.get_str()},
                    {"agree", ok}});
  }
  HilbertFitOptions fit;
  fit.max_sample_degree = c.max_degree;
  DimensionDegree dd = hilbert_dimension_degree(basis, fit);
  const long grade = grade_formula(a.box().sizes);
  const bool grade_ok = static_cast<long>(dd.codimension) == grade;
  json out = header(c);
  out["box"] = a.box().to_string();
  out["rows"] = std::move(rows);
  out["dimension"] = dd.dimension;
  out["codimension"] = dd.codimension;
  out["grade_formula"] = grade;
  out["degree"] = dd.degree.get_str();
  out["passed"] = agree && grade_ok;
  return {std::move(out), agree && grade_ok ? exit_ok : exit_check_failed};
}

Outcome cmd_segre_kernel(const RunConfig& c) {
  Box box = Box::parse(c.target);
  KernelOracleOptions opts;
  opts.gb = gb_options(c);
  if (c.gate_positions)
    opts.gate_positions = *c.gate_positions;
  Ideal kernel = kernel_oracle(box, opts);
  Ideal i2 = all_minors(BoxMatrix::generic(box));
  Ideal i2_basis = buchberger(i2, opts.gb);
  const bool minors_in_kernel = contains(kernel, i2);
  const bool kernel_in_minors = contains(i2_basis, kernel);
  json out = header(c);
  out["box"] = box.to_string();
  out["gate_positions"] = opts.gate_positions;
  out["kernel"] = ideal_to_json(kernel);
  out["minor_count"] = i2.generators().size();
  out["minors_in_kernel"] = minors_in_kernel;
  out["kernel_in_minors"] = kernel_in_minors;
  out["equal"] = minors_in_kernel && kernel_in_minors;
  out["passed"] = minors_in_kernel && kernel_in_minors;
  return {std::move(out), minors_in_kernel && kernel_in_minors ? exit_ok : exit_check_failed};
}

Outcome cmd_decompose(const RunConfig& c) {
  std::ifstream in(c.target);
  if (!in)
    throw ParseError("cannot read tensor file '" + c.target + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("tensor file is not JSON: ") + e.what());
  }
  ConcreteTensor t = tensor_from_json(j);
  if (t.is_zero())
    throw ParseError("the zero tensor has no decomposability verdict");
  Decomposition dec = is_decomposable(t);
  json out = header(c);
  out["sizes"] = t.box.sizes;
  out["decomposable"] = dec.decomposable;
  if (dec.decomposable) {
    json factors = json::array();
    for (const auto& v : dec.factors) {
      json f = json::array();
      for (const auto& x : v)
        f.push_back(rational_string(x));
      factors.push_back(std::move(f));
    }
    out["factors"] = std::move(factors);
  } else {
    const TensorMinor& w = *dec.witness;
    out["witness"] = {{"axis", w.axis + 1},
                      {"first", w.first},
                      {"second", w.second},
                      {"minor", w.poly},
                      {"value", rational_string(w.value)}};
  }
  return {std::move(out), exit_ok};
}

Outcome cmd_blowup(const RunConfig& c) {
  if (c.d < 1 || c.n < 1)
    throw ParseError("blowup needs --d >= 1 and --n >= 1");
  BlowupModel m = build_model(c.d, c.n, c.seed);
  VanishingOptions vopts;
  vopts.seed = c.seed;
  VanishingReport vr = verify_vanishing(m, vopts);
  WeakBoxOptions wopts;
  wopts.gb = gb_options(c);
  if (c.gate_positions)
    wopts.gate_positions = *c.gate_positions;
  WeakBoxReport wr = weak_box_check(m.box, wopts);
  HilbertFitOptions fit;
  fit.max_sample_degree = c.max_degree;
  SurfaceReport sr = verify_surface(m, gb_options(c), fit);

  json out = header(c);
  out["seed"] = c.seed;
  out["model"] = model_to_json(m);
  out["vanishing"] = {{"checks", checks_to_json(vr.checks)}, {"passed", vr.passed()}};
  json weak = weak_box_to_json(wr);
  weak["gating"] = false;
  out["weak_box"] = std::move(weak);
  out["surface"] = surface_to_json(sr);
  const bool passed = vr.passed() && sr.passed();
  out["passed"] = passed && sr.complete;
  int code = exit_ok;
  if (!passed)
    code = exit_check_failed;
  else if (!sr.complete)
    code = exit_budget;
  return {std::move(out), code};
}

void render_text(const json& j, const std::string& indent, std::ostringstream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      os << indent << it.key() << ":\n";
      render_text(v, indent + "  ", os);
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
      os << indent << it.key() << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          os << indent << "  -\n";
          render_text(e, indent + "    ", os);
        } else {
          os << indent << "  " << e.dump() << "\n";
        }
      }
    } else if (v.is_array() && !v.empty() && v.front().is_string() && v.size() > 3) {
      os << indent << it.key() << ":\n";
      for (const auto& e : v)
        os << indent << "  " << e.get<std::string>() << "\n";
    } else if (v.is_string()) {
      os << indent << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      os << indent << it.key() << ": " << v.dump() << "\n";
    }
  }
}

std::string render(const json& j, bool as_json) {
  if (as_json)
    return j.dump(2) + "\n";
  std::ostringstream os;
  render_text(j, "", os);
  return os.str();
}

RunResult failure(const RunConfig& c, int code, const char* kind, const std::string& message) {
  json out = header(c);
  out["error"] = {{"kind", kind}, {"message", message}};
  out["passed"] = false;
  return {code, render(out, c.json)};
}

} // namespace

RunResult run_command(const RunConfig& c) {
  try {
    Outcome o;
    if (c.command == "minors")
      o = cmd_minors(c);
    else if (c.command == "gb-verify")
      o = cmd_gb_verify(c);
    else if (c.command == "hilbert")
      o = cmd_hilbert(c);
    else if (c.command == "segre-kernel")
      o = cmd_segre_kernel(c);
    else if (c.command == "decompose")
      o = cmd_decompose(c);
    else if (c.command == "blowup")
      o = cmd_blowup(c);
    else
      return failure(c, exit_input, "input", "unknown command '" + c.command + "'");
    return {o.code, render(o.body, c.json)};
  } catch (const ParseError& e) {
    return failure(c, exit_input, "input", e.what());
  } catch (const StructuralError& e) {
    return failure(c, exit_input, "input", e.what());
  } catch (const BudgetExhausted& e) {
    return failure(c, exit_budget, "budget", e.what());
  } catch (const GateExceeded& e) {
    return failure(c, exit_budget, "gate", e.what());
  } catch (const GenericityError& e) {
    return failure(c, exit_check_failed, "genericity", e.what());
  } catch (const VerificationError& e) {
    return failure(c, exit_check_failed, "verification", e.what());
  } catch (const std::exception& e) {
    return failure(c, exit_internal, "internal", e.what());
  }
}

} // namespace boxideal::cli
