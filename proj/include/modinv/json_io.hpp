#pragma once

#include <memory>
#include <string>

#include "json.hpp"
#include "modinv/cartan.hpp"
#include "modinv/group.hpp"
#include "modinv/poly.hpp"

namespace modinv {

using Json = nlohmann::json;

// Wire layouts (see docs/SCHEMAS.md):
//   field      {"p": int, "s": int, "modulus": [int]}
//   element    [int] of length s, coefficients low-degree-first
//   ring       {"field": field, "vars": [string]}
//   polynomial {"ring": ring, "terms": [{"exp": [int], "coeff": element}]}
//   group      {"q": field, "d": int, "generators": [[[element]]]} row-major
//   fraction   {"num": polynomial, "base": polynomial, "exp": int}
Json field_to_json(const FieldSpec& field);
Json element_to_json(const FieldSpec& field, FieldCode a);
Json ring_to_json(const PolyRing& ring);
Json polynomial_to_json(const Polynomial& f);
Json group_to_json(const Group& group);
Json fraction_to_json(const Fraction& u);

// Parsers throw std::invalid_argument naming the offending path, e.g.
// "group.generators[1][0][2]: expected an array of 2 integers".
FieldSpecPtr field_from_json(const Json& j, const std::string& path = "field");
FieldCode element_from_json(const FieldSpecPtr& field, const Json& j,
                            const std::string& path = "element");
PolyRingPtr ring_from_json(const Json& j, const std::string& path = "ring");
Polynomial polynomial_from_json(const Json& j,
                                const std::string& path = "polynomial");
// The acting ring is GF(q)[x1..xd] with default variable names.
std::shared_ptr<const Group> group_from_json(const Json& j,
                                             const std::string& path = "group");
Fraction fraction_from_json(const Json& j,
                            const std::string& path = "fraction");

// Reads and parses a whole file; errors carry the file name.
Json load_json_file(const std::string& path);

}  // namespace modinv
