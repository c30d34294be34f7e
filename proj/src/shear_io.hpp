// Shear files: {"edges": [{"p": [num, den], "q": [num, den], "value": x}, ...]}.
#pragma once

#include "shear_field.hpp"

#include <string>

namespace zs {

// Errors carry the JSON path of the offending value and its 1-based line.
ShearFunction parse_shear_json(const std::string& text);

}  // namespace zs
