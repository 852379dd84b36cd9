#include "mldeg/gcd.hpp"

#include <stdexcept>

namespace mldeg {

namespace {

void require_univariate(const RatPoly& p) {
    if (p.variable_count() != 1) throw std::invalid_argument("univariate operation on multivariate polynomial");
}

}  // namespace

std::pair<RatPoly, RatPoly> univariate_divmod(const RatPoly& a, const RatPoly& b) {
    require_univariate(a);
    require_univariate(b);
    if (b.is_zero()) throw std::invalid_argument("univariate division by zero polynomial");
    RatPoly quotient(1);
    RatPoly remainder = a;
    int db = b.total_degree();
    Rational lb = b.leading_coefficient();
    while (!remainder.is_zero() && remainder.total_degree() >= db) {
        int shift = remainder.total_degree() - db;
        Rational factor = remainder.leading_coefficient() / lb;
        RatPoly t(1);
        t.add_term(Monomial::variable(0, shift), factor);
        quotient += t;
        remainder -= t * b;
    }
    return {quotient, remainder};
}

RatPoly make_monic(const RatPoly& p) {
    require_univariate(p);
    if (p.is_zero()) return p;
    return p.scaled(Rational(1) / p.leading_coefficient());
}

RatPoly univariate_gcd(const RatPoly& a, const RatPoly& b) {
    require_univariate(a);
    require_univariate(b);
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    RatPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        RatPoly r2 = univariate_divmod(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return make_monic(r0);
}

}  // namespace mldeg
