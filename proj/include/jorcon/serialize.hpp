#pragma once

#include <json.hpp>
#include <string>

#include "jorcon/algebra.hpp"
#include "jorcon/matrix.hpp"

namespace jorcon {

using json = nlohmann::ordered_json;

// Scalar: {"num": [[e_p, e_h, e_h', "a", "b"], ...], "den": [...]} where a
// term is (a + b*sqrt 2) p^e_p h^e_h h'^e_h' and a, b are rational strings.
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

// {"dims": [...], "rows": [[Scalar, ...], ...]}
json to_json(const LabeledMatrix& m);
LabeledMatrix matrix_from_json(const json& j);

json to_json(const Generator& g);
Generator generator_from_json(const json& j);

// {"const": Scalar, "lin": [[gen, Scalar], ...], "quad": [[gen, gen, Scalar], ...]}
json to_json(const AlgElement& e);
AlgElement element_from_json(const json& j);

json to_json(const RelationSet& r);

std::string render_text(const LabeledMatrix& m);
std::string render_text(const RelationSet& r);

json parse_json(const std::string& text);

} // namespace jorcon
