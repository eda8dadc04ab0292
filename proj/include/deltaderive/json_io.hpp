#pragma once

#include <json.hpp>

#include "deltaderive/catalog.hpp"
#include "deltaderive/solver.hpp"

namespace dd {

using nlohmann::json;

// Rationals serialize as "p/q", or "p" for integers.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

// {"dim": n, "unit": [...], "table": [[["p/q",...],...],...], "label": "..."}
json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

// Same layout with "action" in place of "table"; the algebra is inlined.
json bimodule_to_json(const Bimodule& m);
Bimodule bimodule_from_json(const json& j);

// {algebra_label, module_label, delta: "p/q" | "generic", dimension, basis}
json derivation_report(const DerivationSpace& s);

json sweep_report(const Bimodule& m, const SweepReport& r);

json whitehead_to_json(const WhiteheadReport& r);

}  // namespace dd
