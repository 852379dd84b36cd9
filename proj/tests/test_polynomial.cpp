#include <doctest.h>

#include <random>
#include <vector>

#include "mldeg/polynomial.hpp"
#include "support/test_support.hpp"

using namespace mldeg;
using mldeg::testing::random_complex_point;
using mldeg::testing::random_rat_poly;
using mldeg::testing::random_rational_point;

namespace {

RatPoly var(int nvars, int idx) { return RatPoly::variable(nvars, idx); }
RatPoly cst(int nvars, long v) { return RatPoly::constant(nvars, Rational(v)); }

}  // namespace

TEST_CASE("product of conjugate binomials") {
    RatPoly x = var(1, 0);
    RatPoly lhs = (x + cst(1, 1)) * (x - cst(1, 1));
    RatPoly rhs = x * x - cst(1, 1);
    CHECK(lhs == rhs);
}

TEST_CASE("subtraction cancels to a constant") {
    RatPoly x = var(1, 0);
    RatPoly a = cst(1, 2) * x * x + cst(1, 2) * x + cst(1, 1);
    RatPoly b = x * x + x + cst(1, 1);
    RatPoly diff = a - b.scaled(Rational(2));
    CHECK(diff == cst(1, -1));
    CHECK(diff.total_degree() == 0);
}

TEST_CASE("degree conventions") {
    RatPoly zero(3);
    CHECK(zero.total_degree() == -1);
    CHECK(zero.is_zero());
    CHECK(cst(3, 7).total_degree() == 0);
    RatPoly x = var(3, 0), y = var(3, 1);
    CHECK((x * x * y + y).total_degree() == 3);
}

TEST_CASE("no zero coefficients are stored") {
    RatPoly x = var(2, 0), y = var(2, 1);
    RatPoly p = x * y - x * y;
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    RatPoly q = x + y;
    q -= x;
    for (const auto& [mono, c] : q.terms()) CHECK(sgn(c) != 0);
    CHECK(q == y);
}

TEST_CASE("differentiation of a mixed monomial") {
    RatPoly x = var(2, 0), y = var(2, 1);
    RatPoly p = x * x * x * y;
    CHECK(p.differentiate(0) == cst(2, 3) * x * x * y);
    CHECK(p.differentiate(1) == x * x * x);
}

TEST_CASE("exact evaluation at a rational point") {
    RatPoly p1 = var(2, 0), p2 = var(2, 1);
    RatPoly f = p1 + p2 - cst(2, 1);
    std::vector<Rational> point{make_rational(2, 5), make_rational(3, 5)};
    Rational value = f.evaluate_as<Rational>(std::span<const Rational>(point));
    CHECK(sgn(value) == 0);
}

TEST_CASE("graded lex leading term") {
    RatPoly x = var(2, 0), y = var(2, 1);
    RatPoly p = y * y * y + x * x;  // degree 3 term wins even with later variable
    CHECK(p.total_degree() == 3);
    CHECK(p.leading_coefficient() == Rational(1));
    RatPoly q = x * x + x * y;  // same degree: x^2 is the leading monomial
    CHECK(q.terms().rbegin()->first == Monomial(std::vector<int>{2, 0}));
}

TEST_CASE("embedding preserves terms and evaluation") {
    RatPoly x = var(2, 0), y = var(2, 1);
    RatPoly p = x * y + x;
    RatPoly q = p.embed(4);
    CHECK(q.variable_count() == 4);
    std::vector<Complex> point{{1.5, 0.25}, {-0.75, 1.0}, {3.0, 0.0}, {0.0, 2.0}};
    Complex vq = q.evaluate(std::span<const Complex>(point));
    std::vector<Complex> small{point[0], point[1]};
    Complex vp = p.evaluate(std::span<const Complex>(small));
    CHECK(std::abs(vq - vp) < 1e-14);
}

TEST_CASE("monomial content and division") {
    RatPoly x = var(2, 0), y = var(2, 1);
    RatPoly p = x * x * y + x * y * y;
    Monomial content = p.monomial_content();
    CHECK(content == Monomial(std::vector<int>{1, 1}));
    RatPoly reduced = p.divide_monomial(content);
    CHECK(reduced == x + y);
    CHECK_THROWS_AS((x + y).divide_monomial(Monomial::variable(0)), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        int nvars = 1 + static_cast<int>(rng() % 3);
        RatPoly a = random_rat_poly(rng, nvars, 4, 4);
        RatPoly b = random_rat_poly(rng, nvars, 4, 4);
        RatPoly c = random_rat_poly(rng, nvars, 3, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RatPoly(nvars));
    }
}

TEST_CASE("product rule on random polynomials") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        int nvars = 1 + static_cast<int>(rng() % 3);
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(nvars));
        RatPoly a = random_rat_poly(rng, nvars, 4, 4);
        RatPoly b = random_rat_poly(rng, nvars, 4, 4);
        CHECK((a * b).differentiate(v) == a.differentiate(v) * b + a * b.differentiate(v));
    }
}

TEST_CASE("exact and floating evaluation agree") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        int nvars = 1 + static_cast<int>(rng() % 3);
        RatPoly p = random_rat_poly(rng, nvars, 5, 5);
        std::vector<Rational> point = random_rational_point(rng, nvars);
        Rational exact = p.evaluate_as<Rational>(std::span<const Rational>(point));
        std::vector<Complex> cpoint;
        for (const auto& r : point) cpoint.push_back(to_complex(r));
        Complex approx = to_complex_poly(p).evaluate(std::span<const Complex>(cpoint));
        double scale = 1.0 + std::abs(to_complex(exact));
        CHECK(std::abs(approx - to_complex(exact)) / scale < 1e-12);
    }
}

TEST_CASE("rendering uses explicit operators") {
    RatPoly x = var(2, 0), y = var(2, 1);
    RatPoly p = cst(2, 2) * x * x * y - y + cst(2, 1).scaled(make_rational(1, 2));
    std::vector<std::string> names{"x", "y"};
    CHECK(p.to_string(names) == "2*x^2*y - y + 1/2");
}
