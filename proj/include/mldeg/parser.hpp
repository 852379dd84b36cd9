#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mldeg/rational_function.hpp"

namespace mldeg {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, size_t position)
        : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"), position_(position) {}

    size_t position() const { return position_; }

  private:
    size_t position_;
};

// Grammar: integer and ratio literals (3, 5/7), named variables, + - * / ^,
// parentheses. Multiplication is always explicit and exponents are integer
// literals (negative allowed). Variables resolve against `names` by index.
RatFun parse_rational_function(std::string_view text, std::span<const std::string> names);

// Same grammar, but the result must have a constant denominator, which is
// folded into the coefficients.
RatPoly parse_polynomial(std::string_view text, std::span<const std::string> names);

}  // namespace mldeg
