#pragma once

#include <stdexcept>
#include <string>

#include "riesz/geometry.hpp"

namespace riesz {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Body file schema (JSON):
///   { "dimension": 2,
///     "loops": [ { "kind": "polygon"|"circle", "orientation": 1|-1,
///                  "vertices": [[x,y],...] | "center": [x,y], "radius": r } ] }
/// Unknown keys and dimensions other than 2 are rejected.
Body parse_body_json(const std::string& text);
Body load_body_file(const std::string& path);
std::string serialize_body(const Body& body);

}  // namespace riesz
