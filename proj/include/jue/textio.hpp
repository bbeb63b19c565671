#pragma once

#include <string>

#include "jue/ratfun.hpp"

namespace jue {

// Parse an arithmetic expression (integers, named variables, + - * / ^ and
// parentheses) into an exact rational function over the given variable set.
// Accepts everything RationalFunction::to_string emits. Throws ParseError.
RationalFunction parse_ratfun(const std::string& text, VarSet vs);

}  // namespace jue
