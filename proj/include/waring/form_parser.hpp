#pragma once

#include <string>

#include "waring/binary_form.hpp"
#include "waring/errors.hpp"

namespace waring {

struct FormExpr {
    std::string source;
    BinaryForm form;
};

struct ParseError : InputError {
    ParseError(const std::string& msg, std::size_t pos)
        : InputError(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Sums of terms `coeff * x0^i * x1^j`; coeff is an integer or p/q rational;
// all terms must share the same total degree. Exact: rationals never pass
// through floating point.
FormExpr parse_form(const std::string& text);

}  // namespace waring
