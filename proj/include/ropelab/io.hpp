#pragma once

#include <string>

#include "json.hpp"
#include "ropelab/complex.hpp"
#include "ropelab/normal.hpp"
#include "ropelab/rope.hpp"

namespace ropelab {

using Json = nlohmann::json;

// {"deg": d, "coeffs": [...]}; coefficients are integers or "a/b" strings.
// A bare string such as "u^2 - t^2" is accepted on input.
Json to_json(const HomPoly& p);
HomPoly hompoly_from_json(const Field& f, const Json& j);

Json to_json(const GradedMap& m);

// {"n", "field", "B"} plus the derived A, types and genus on output.
// Input may carry "A" instead of "B"; a stored "alpha" is checked.
Json to_json(const Rope& c);
Rope rope_from_json(const Json& j);
Rope load_rope(const std::string& path);
void save_rope(const Rope& c, const std::string& path);

Json to_json(const ComplexRep& c);
void dump_complex(const ComplexRep& c, const std::string& path);

Json to_json(const NormalSections& s);

}  // namespace ropelab
