#include <doctest.h>

#include <cmath>

#include "mldeg/solve.hpp"
#include "support/multistart.hpp"

using namespace mldeg;
using mldeg::testing::multistart_roots;
using mldeg::testing::same_point_sets;

namespace {

CxPoly cvar(int nvars, int idx) { return CxPoly::variable(nvars, idx); }
CxPoly ccst(int nvars, Complex v) { return CxPoly::constant(nvars, v); }

std::vector<Vec> solution_points(const SolutionSet& set) {
    std::vector<Vec> pts;
    for (const auto& s : set.solutions) pts.push_back(s.point);
    return pts;
}

}  // namespace

TEST_CASE("four corners of a product of quadrics") {
    CxPoly x = cvar(2, 0), y = cvar(2, 1);
    SquareSystem sys({x * x - ccst(2, 1.0), y * y - ccst(2, 1.0)});
    TrackerConfig cfg;
    SolutionSet set = solve_square(sys, cfg);
    CHECK(set.bezout_count == 4);
    CHECK(set.paths.finite == 4);
    CHECK(set.paths.diverged == 0);
    CHECK(set.paths.failed == 0);
    CHECK(set.fully_tracked());
    REQUIRE(set.solutions.size() == 4);
    // Canonical order: lexicographic by real then imaginary part.
    CHECK(std::abs(set.solutions[0].point[0] - Complex(-1.0, 0.0)) < 1e-10);
    CHECK(std::abs(set.solutions[0].point[1] - Complex(-1.0, 0.0)) < 1e-10);
    CHECK(std::abs(set.solutions[3].point[0] - Complex(1.0, 0.0)) < 1e-10);
    CHECK(std::abs(set.solutions[3].point[1] - Complex(1.0, 0.0)) < 1e-10);
    for (const auto& s : set.solutions) {
        CHECK(s.flag == MultiplicityFlag::simple);
        CHECK(s.paths_merged == 1);
        CHECK(s.residual < 1e-10);
    }
}

TEST_CASE("solutions at infinity show up as diverged paths") {
    CxPoly x = cvar(2, 0), y = cvar(2, 1);
    SquareSystem sys({x * y - ccst(2, 1.0), x});
    TrackerConfig cfg;
    SolutionSet set = solve_square(sys, cfg);
    CHECK(set.bezout_count == 2);
    CHECK(set.paths.finite == 0);
    CHECK(set.paths.diverged == 2);
    CHECK(set.paths.failed == 0);
    CHECK(set.solutions.empty());
}

TEST_CASE("a double root is merged and flagged") {
    CxPoly x = cvar(2, 0), y = cvar(2, 1);
    SquareSystem sys({(x - ccst(2, 1.0)) * (x - ccst(2, 1.0)), y - ccst(2, 1.0)});
    TrackerConfig cfg;
    SolutionSet set = solve_square(sys, cfg);
    CHECK(set.bezout_count == 2);
    CHECK(set.paths.finite == 2);
    REQUIRE(set.solutions.size() == 1);
    CHECK(set.solutions[0].flag == MultiplicityFlag::clustered);
    CHECK(set.solutions[0].paths_merged == 2);
    CHECK(std::abs(set.solutions[0].point[0] - Complex(1.0, 0.0)) < 1e-4);
}

TEST_CASE("distinct reported solutions are separated") {
    CxPoly x = cvar(2, 0), y = cvar(2, 1);
    SquareSystem sys({x * x * x - ccst(2, 8.0), y * y - x});
    TrackerConfig cfg;
    SolutionSet set = solve_square(sys, cfg);
    CHECK(set.fully_tracked());
    CHECK(set.solutions.size() == 6);
    for (size_t i = 0; i < set.solutions.size(); ++i)
        for (size_t j = i + 1; j < set.solutions.size(); ++j)
            CHECK((set.solutions[i].point - set.solutions[j].point).norm() > cfg.cluster_radius);
}

TEST_CASE("runs are deterministic for a fixed seed") {
    CxPoly x = cvar(2, 0), y = cvar(2, 1);
    SquareSystem sys({x * x * x - y - ccst(2, Complex(0.5, 0.25)), x + y * y - ccst(2, 2.0)});
    TrackerConfig cfg;
    cfg.seed = 20240817;
    SolutionSet a = solve_square(sys, cfg);
    SolutionSet b = solve_square(sys, cfg);
    REQUIRE(a.solutions.size() == b.solutions.size());
    for (size_t i = 0; i < a.solutions.size(); ++i) {
        CHECK(a.solutions[i].point == b.solutions[i].point);  // bitwise equality
        CHECK(a.solutions[i].residual == b.solutions[i].residual);
    }
    CHECK(a.paths.finite == b.paths.finite);
    CHECK(a.paths.diverged == b.paths.diverged);
}

TEST_CASE("different seeds find the same solution set") {
    CxPoly x = cvar(2, 0), y = cvar(2, 1);
    SquareSystem sys({x * x * x - y - ccst(2, Complex(0.5, 0.25)), x + y * y - ccst(2, 2.0)});
    TrackerConfig a, b;
    a.seed = 1;
    b.seed = 99991;
    SolutionSet sa = solve_square(sys, a);
    SolutionSet sb = solve_square(sys, b);
    CHECK(sa.fully_tracked());
    CHECK(sb.fully_tracked());
    CHECK(sa.solutions.size() == sb.solutions.size());
    CHECK(same_point_sets(solution_points(sa), solution_points(sb), 1e-8));
}

TEST_CASE("homotopy and multistart agree on a dense quadric pair") {
    CxPoly x = cvar(2, 0), y = cvar(2, 1);
    SquareSystem sys({x * x + x * y + ccst(2, Complex(0.0, 0.5)) * y - ccst(2, 2.0),
                      y * y - x + ccst(2, Complex(0.25, -0.5))});
    TrackerConfig cfg;
    SolutionSet set = solve_square(sys, cfg);
    CHECK(set.fully_tracked());
    std::vector<Vec> oracle = multistart_roots(sys, 4000, 10.0, 77);
    CHECK(same_point_sets(solution_points(set), oracle, 1e-8));
    CHECK(set.solutions.size() == oracle.size());
}

TEST_CASE("clustering collapses nearby points to their means") {
    std::vector<Vec> pts;
    Vec a(1), b(1), c(1);
    a << Complex(0.0, 0.0);
    b << Complex(4e-7, 0.0);
    c << Complex(5.0, 1.0);
    pts = {a, b, c};
    auto reps = cluster_solutions(pts, 1e-6);
    REQUIRE(reps.size() == 2);
    bool near_origin = std::abs(reps[0][0] - Complex(2e-7, 0.0)) < 1e-9 ||
                       std::abs(reps[1][0] - Complex(2e-7, 0.0)) < 1e-9;
    CHECK(near_origin);
}

TEST_CASE("chains cluster transitively") {
    std::vector<Vec> pts;
    for (int i = 0; i < 5; ++i) {
        Vec v(1);
        v << Complex(i * 8e-7, 0.0);  // consecutive gaps below the radius
        pts.push_back(v);
    }
    auto reps = cluster_solutions(pts, 1e-6);
    CHECK(reps.size() == 1);
}
