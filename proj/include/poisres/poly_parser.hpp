#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "poisres/polynomial.hpp"

namespace poisres::exactalg {

enum class ParseErrorKind { syntax, unknown_variable, negative_exponent };

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, const std::string& message, std::size_t position);

    ParseErrorKind kind() const noexcept { return kind_; }
    // Byte offset into the input where the problem starts (0-based).
    std::size_t position() const noexcept { return position_; }

private:
    ParseErrorKind kind_;
    std::size_t position_;
};

// Parses an expression over x1..x{nvars} with +, -, *, ^, parentheses and
// integer or rational literals (e.g. "3/2*x1^2 - x2"). Precedence: ^ binds
// tighter than unary minus, which binds tighter than *, which binds tighter
// than + and -; all operators associate to the left. Whitespace is ignored.
Polynomial parse_poly(std::string_view text, int nvars);

}  // namespace poisres::exactalg
