#pragma once

#include <string>

#include "qsym/ratfunc.hpp"

namespace qsym {

/// Parse an arithmetic expression over integers and named symbols.
/// Supported: + - * / ^ with parentheses, unary minus, and integer
/// exponents (negative allowed). Unknown names register as parameters.
RatFunc parse_ratfunc(const std::string& text);

}  // namespace qsym
