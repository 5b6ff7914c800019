#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "amalgam/complex2.hpp"
#include "amalgam/covers.hpp"
#include "amalgam/specs.hpp"

namespace amalgam {

using Json = nlohmann::ordered_json;

// Input spec schema:
//   {"family":"C","g":2,"h":2,"m":2,"n":3,
//    "curve_a":{"kind":"nonseparating"},
//    "curve_b":{"kind":"separating","split":[1,1]}}
//   {"family":"W","arms":[1,1,2,2,2,3]}
struct ParsedSpec {
    std::optional<SurfaceAmalgamSpec> amalgam;  // family C, already validated
    std::optional<ThetaGraphSpec> theta;        // family W, already validated
    std::vector<std::string> errors;
    bool ok() const { return amalgam.has_value() || theta.has_value(); }
};

ParsedSpec parse_spec(const Json& j);
ParsedSpec parse_spec_text(const std::string& text);

Json to_json(const SurfaceAmalgamSpec& s);
Json to_json(const ThetaGraphSpec& t);
Json to_json(const EulerVector& v);  // array of "p/4" strings

Json to_json(const Complex2& c);
Complex2 complex_from_json(const Json& j);

Json to_json(const CoverMap& cm);
CoverMap covermap_from_json(const Json& j);

Json to_json(const Tower& t);

}  // namespace amalgam
