#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "mldeg/data.hpp"
#include "mldeg/family.hpp"
#include "mldeg/parser.hpp"

using namespace mldeg;

namespace {

TrackerConfig quick_config(std::uint64_t seed = 42) {
    TrackerConfig cfg;
    cfg.seed = seed;
    return cfg;
}

const std::vector<std::string> kParamNames{"x", "y"};

}  // namespace

TEST_CASE("boundary curve polynomials match their expanded form") {
    CHECK(boundary_curve_polynomial(1) == parse_polynomial("-x^2*y - x*y^2 + 3*x*y + x - y", kParamNames));
    CHECK(boundary_curve_polynomial(3) ==
          parse_polynomial("x^3*y - x^2*y - x*y^2 + 2*x*y + x - y", kParamNames));
    CHECK(boundary_curve_polynomial(1).total_degree() == 3);
    for (int m = 3; m <= 9; m += 2) CHECK(boundary_curve_polynomial(m).total_degree() == m + 1);
}

TEST_CASE("the degree three member has the real double point") {
    auto pts = double_points(3);
    REQUIRE(pts.size() == 1);
    REQUIRE(pts[0].size() == 4);
    CHECK(std::abs(pts[0][0] - Complex(-1.0)) < 1e-12);
    CHECK(std::abs(pts[0][1] - Complex(1.0)) < 1e-12);
    CHECK(std::abs(pts[0][2] - Complex(1.0)) < 1e-12);
    CHECK(std::abs(pts[0][3] - Complex(1.0)) < 1e-12);
}

TEST_CASE("double point counts and torus certificates for small members") {
    for (int m = 1; m <= 15; m += 2) {
        CHECK(double_points(m).size() == static_cast<size_t>((m - 1) / 2));
        CHECK(double_points_in_torus(m));
        CHECK(image_euler_characteristic(m) == (3 - m) / 2);
    }
}

TEST_CASE("monomial map determinant is the degree up to sign") {
    for (int m = 1; m <= 9; m += 2) {
        long long det = degree_m_map(m).determinant();
        CHECK(std::abs(det) == m);
    }
}

TEST_CASE("monomial map agrees with the image coordinates on the base surface") {
    std::mt19937_64 rng(4242);
    for (int m : {1, 3, 5}) {
        MonomialMap map = degree_m_map(m);
        std::vector<RatFun> q = image_coordinates(m);
        for (int trial = 0; trial < 5; ++trial) {
            Complex x = std::polar(0.3 + canonical_double(rng), 6.28 * canonical_double(rng));
            Complex y = std::polar(0.3 + canonical_double(rng), 6.28 * canonical_double(rng));
            std::vector<Complex> base{x, y, Complex(1.0) - x, Complex(1.0) - y};
            std::vector<Complex> image = map.apply(base);
            std::vector<Complex> at{x, y};
            REQUIRE(image.size() == 4);
            for (size_t i = 0; i < 4; ++i)
                CHECK(std::abs(image[i] - to_complex_fun(q[i]).evaluate(at)) < 1e-10 * (1.0 + std::abs(image[i])));
        }
    }
}

TEST_CASE("double point fibers are conjugate parameter pairs") {
    TrackerConfig cfg = quick_config();
    for (int m : {3, 5}) {
        std::vector<RatFun> q = image_coordinates(m);
        for (const auto& s : double_points(m)) {
            auto pre = parameter_preimages(m, s, cfg);
            REQUIRE(pre.size() == 2);
            CHECK(std::abs(pre[0][0] - pre[1][0]) > 1e-6);  // genuinely distinct points
            for (const auto& p : pre) {
                std::vector<Complex> at{p[0], p[1]};
                for (size_t i = 0; i < 4; ++i)
                    CHECK(std::abs(to_complex_fun(q[i]).evaluate(at) - s[i]) < 1e-8 * (1.0 + std::abs(s[i])));
            }
        }
    }
}

TEST_CASE("generic image points have a single preimage") {
    TrackerConfig cfg = quick_config();
    std::mt19937_64 rng(99);
    std::vector<RatFun> q = image_coordinates(3);
    for (int trial = 0; trial < 3; ++trial) {
        Complex x = std::polar(0.5 + canonical_double(rng), 6.28 * canonical_double(rng));
        Complex y = std::polar(0.5 + canonical_double(rng), 6.28 * canonical_double(rng));
        std::vector<Complex> at{x, y};
        std::vector<Complex> image;
        for (const auto& f : q) image.push_back(to_complex_fun(f).evaluate(at));
        auto pre = parameter_preimages(3, image, cfg);
        REQUIRE(pre.size() == 1);
        CHECK(std::abs(pre[0][0] - x) < 1e-8);
        CHECK(std::abs(pre[0][1] - y) < 1e-8);
    }
}

TEST_CASE("boundary curves of the first two members are smooth") {
    TrackerConfig cfg = quick_config();
    CHECK(boundary_curve_is_smooth(1, cfg));
    CHECK(boundary_curve_is_smooth(3, cfg));
}

TEST_CASE("first member report: tight bound with no double points") {
    FamilyReport rep = verify_family(1, quick_config());
    CHECK(rep.certified);
    CHECK(rep.double_point_count == 0);
    CHECK(rep.surface_ml.count == 9);
    CHECK(rep.surface_ml.certified);
    CHECK(rep.boundary_ml.count == 8);
    CHECK(rep.boundary_ml.certified);
    CHECK(rep.image_chi == 1);
    CHECK(rep.surface_chi == 9);
    CHECK(rep.ic_chi == 9);
    CHECK(rep.gap == 0);
    CHECK(rep.gap_matches_double_points);
    CHECK(rep.bound_holds);
    CHECK(rep.bound_tight);
}

TEST_CASE("third member report: chi undercounts by the double point") {
    FamilyReport rep = verify_family(3, quick_config());
    CHECK(rep.certified);
    CHECK(rep.double_point_count == 1);
    CHECK(rep.surface_ml.count == 12);
    CHECK(rep.boundary_ml.count == 11);
    CHECK(rep.image_chi == 0);
    CHECK(rep.surface_chi == 11);
    CHECK(rep.ic_chi == 12);
    CHECK(rep.gap == 1);
    CHECK(rep.gap_matches_double_points);
    CHECK(rep.bound_holds);
    CHECK(rep.bound_tight);
    // The surface chi is strictly below the ML degree: the very affine variety
    // is not smooth enough for the signed-chi equality to survive the gluing.
    CHECK(rep.surface_chi < rep.surface_ml.count);
}

TEST_CASE("family entry points reject even or nonpositive indices") {
    TrackerConfig cfg = quick_config();
    CHECK_THROWS_AS(double_points(2), std::invalid_argument);
    CHECK_THROWS_AS(double_points(0), std::invalid_argument);
    CHECK_THROWS_AS(double_points(-3), std::invalid_argument);
    CHECK_THROWS_AS(boundary_curve_polynomial(4), std::invalid_argument);
    CHECK_THROWS_AS(verify_family(6, cfg), std::invalid_argument);
    CHECK_THROWS_AS(glued_surface_model(2, cfg), std::invalid_argument);
}

TEST_CASE("monomial map rejects malformed input") {
    MonomialMap map = degree_m_map(3);
    CHECK_THROWS_AS(map.apply({Complex(1.0), Complex(2.0)}), std::invalid_argument);
    CHECK_THROWS_AS(map.apply({Complex(1.0), Complex(0.0), Complex(1.0), Complex(1.0)}), std::domain_error);
    MonomialMap empty;
    CHECK_THROWS_AS(empty.determinant(), std::invalid_argument);
    MonomialMap ragged;
    ragged.exponents = {{1, 0}, {1}};
    CHECK_THROWS_AS(ragged.determinant(), std::invalid_argument);
}
