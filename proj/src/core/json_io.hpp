#pragma once

#include <json.hpp>

#include "core/laurent.hpp"
#include "core/qmatrix.hpp"

namespace veron {

using Json = nlohmann::ordered_json;

// File formats (all JSON):
//   matrix:  {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}
//   laurent: {"size": r, "entries": [[[ [e, "p/q"], ... ], ...], ...]}
//            (each entry is a list of [exponent, coefficient] pairs)
// Parse errors raise Err::Parse.

QMatrix qmatrix_from_json(const Json& j);
Json qmatrix_to_json(const QMatrix& m);

LMatrix lmatrix_from_json(const Json& j);
Json lmatrix_to_json(const LMatrix& m);

Json parse_json_text(const std::string& text);  // wraps nlohmann errors into Err::Parse

}  // namespace veron
