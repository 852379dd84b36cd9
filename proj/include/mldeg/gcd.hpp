#pragma once

#include <utility>

#include "mldeg/polynomial.hpp"

namespace mldeg {

// Exact univariate operations over the rationals. All inputs must be built
// on exactly one variable; anything else is rejected.

// Quotient and remainder of a by b, with deg(remainder) < deg(b).
std::pair<RatPoly, RatPoly> univariate_divmod(const RatPoly& a, const RatPoly& b);

// Monic greatest common divisor by the Euclidean algorithm. gcd(p, 0) is the
// monic rescaling of p; gcd(0, 0) is rejected.
RatPoly univariate_gcd(const RatPoly& a, const RatPoly& b);

RatPoly make_monic(const RatPoly& p);

}  // namespace mldeg
