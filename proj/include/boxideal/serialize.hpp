#pragma once

#include "boxideal/blowup.hpp"
#include "boxideal/box.hpp"
#include "boxideal/groebner.hpp"
#include "boxideal/segre.hpp"

#include <json.hpp>

#include <string>

namespace boxideal {

using json = nlohmann::ordered_json;

/// "3", "-1/2".
std::string rational_string(const Rational& r);
Rational parse_rational(const std::string& text);

/// "x[1,2]" -> indexed, "w1" -> plain.
Variable parse_variable(const std::string& name);

/// {"variables":[...], "order":"degrevlex/first_smallest", "generators":[...], "groebner":bool}
json ideal_to_json(const Ideal& ideal);
Ideal ideal_from_json(const json& j);

/// {"sizes":[...], "entries":[{"pos":[...],"value":"a/b"}]}; zero entries
/// are omitted on output and default to zero on input.
json tensor_to_json(const ConcreteTensor& t);
ConcreteTensor tensor_from_json(const json& j);

json weak_box_to_json(const WeakBoxReport& r);
json checks_to_json(const std::vector<Check>& checks);
json surface_to_json(const SurfaceReport& r);
json model_to_json(const BlowupModel& m);

} // namespace boxideal
