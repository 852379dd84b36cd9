#include "mldeg/family.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

#include "mldeg/data.hpp"
#include "mldeg/gcd.hpp"
#include "mldeg/solve.hpp"
#include "mldeg/system.hpp"

namespace mldeg {

namespace {

void require_odd(int m) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("family index m must be an odd positive integer");
}

Complex ipow(Complex base, int e) {
    if (e < 0) return Complex(1.0) / ipow(base, -e);
    Complex r(1.0);
    while (e != 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

long long int_determinant(const std::vector<std::vector<long long>>& a) {
    size_t n = a.size();
    if (n == 1) return a[0][0];
    long long det = 0;
    for (size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        std::vector<std::vector<long long>> minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<long long> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[r][c]);
            minor.push_back(std::move(row));
        }
        long long cof = a[0][j] * int_determinant(minor);
        det += (j % 2 == 0) ? cof : -cof;
    }
    return det;
}

}  // namespace

long long MonomialMap::determinant() const {
    size_t n = exponents.size();
    if (n == 0) throw std::invalid_argument("empty monomial map");
    std::vector<std::vector<long long>> a;
    a.reserve(n);
    for (const auto& row : exponents) {
        if (row.size() != n) throw std::invalid_argument("monomial map exponent matrix must be square");
        a.emplace_back(row.begin(), row.end());
    }
    return int_determinant(a);
}

std::vector<Complex> MonomialMap::apply(const std::vector<Complex>& point) const {
    std::vector<Complex> out;
    out.reserve(exponents.size());
    for (const auto& row : exponents) {
        if (row.size() != point.size()) throw std::invalid_argument("monomial map applied to point of wrong size");
        Complex v(1.0);
        for (size_t i = 0; i < row.size(); ++i) {
            if (row[i] == 0) continue;
            if (point[i] == Complex(0.0) && row[i] < 0)
                throw std::domain_error("monomial map with negative exponent at a zero coordinate");
            v *= ipow(point[i], row[i]);
        }
        out.push_back(v);
    }
    return out;
}

TorusModel base_surface_implicit() {
    RatPoly one = RatPoly::constant(4, Rational(1));
    RatPoly e1 = RatPoly::variable(4, 0) + RatPoly::variable(4, 2) - one;
    RatPoly e2 = RatPoly::variable(4, 1) + RatPoly::variable(4, 3) - one;
    return TorusModel::implicit_model(4, {e1, e2});
}

TorusModel base_surface_parametrized() {
    RatPoly x = RatPoly::variable(2, 0);
    RatPoly y = RatPoly::variable(2, 1);
    RatPoly one = RatPoly::constant(2, Rational(1));
    std::vector<RatFun> coords{RatFun(x), RatFun(y), RatFun(one - x), RatFun(one - y)};
    return TorusModel::parametrized_model(4, {"x", "y"}, std::move(coords), {});
}

MonomialMap degree_m_map(int m) {
    require_odd(m);
    MonomialMap map;
    map.exponents = {{m, 0, 0, 0}, {1, -1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}};
    return map;
}

std::vector<RatFun> image_coordinates(int m) {
    require_odd(m);
    RatPoly x = RatPoly::variable(2, 0);
    RatPoly y = RatPoly::variable(2, 1);
    RatPoly one = RatPoly::constant(2, Rational(1));
    std::vector<RatFun> q;
    q.emplace_back(x.pow(m));
    q.emplace_back(x, y);
    q.emplace_back(x * (one - x));
    q.emplace_back(x * (one - y));
    return q;
}

RatPoly boundary_curve_polynomial(int m) {
    std::vector<RatFun> q = image_coordinates(m);
    RatFun sum = q[0] + q[1] + q[2] + q[3] - RatFun::constant(2, Rational(1));
    // sum(q) - 1 comes out as numerator / y, so the numerator alone cuts the
    // curve out of the parameter torus
    return sum.numerator();
}

std::vector<std::vector<Complex>> double_points(int m) {
    require_odd(m);
    std::vector<std::vector<Complex>> pts;
    pts.reserve(static_cast<size_t>((m - 1) / 2));
    for (int i = 1; i <= (m - 1) / 2; ++i) {
        Complex xi = std::polar(1.0, 2.0 * std::numbers::pi * i / m);
        Complex w = Complex(1.0) + xi;
        Complex shared = xi / (w * w);
        pts.push_back({Complex(1.0) / ipow(w, m), Complex(1.0), shared, shared});
    }
    return pts;
}

bool double_points_in_torus(int m) {
    require_odd(m);
    if (m == 1) return true;  // nothing to certify

    // 1 - sum(q) at the i-th double point is, up to the unit (1+w)^-m, equal
    // to -(2w(1+w)^(m-2) + 1) at w = xi^i. The double points all stay inside
    // the torus exactly when 2x(1+x)^(m-2) + 1 shares no root with
    // 1 + x + ... + x^(m-1), whose roots are the nontrivial m-th roots of
    // unity.
    RatPoly x = RatPoly::variable(1, 0);
    RatPoly one = RatPoly::constant(1, Rational(1));
    RatPoly g = (x + x) * (one + x).pow(m - 2) + one;
    RatPoly cyc(1);
    for (int k = 0; k < m; ++k) cyc += x.pow(k);
    if (univariate_gcd(g, cyc).total_degree() != 0) return false;

    for (const auto& s : double_points(m)) {
        Complex total = s[0] + s[1] + s[2] + s[3];
        if (std::abs(total - Complex(1.0)) <= 1e-9) return false;
    }
    return true;
}

std::vector<std::vector<Complex>> parameter_preimages(int m, const std::vector<Complex>& image_point,
                                                      const TrackerConfig& config) {
    require_odd(m);
    if (image_point.size() != 4) throw std::invalid_argument("image point must have four coordinates");

    // q2 = x/y and q3 = x(1-x) give a square subsystem in (x, y); the two
    // candidate roots are then filtered against q1 = x^m and q4 = x(1-y).
    CxPoly x = CxPoly::variable(2, 0);
    CxPoly y = CxPoly::variable(2, 1);
    CxPoly one = CxPoly::constant(2, Complex(1.0));
    std::vector<CxPoly> eqs;
    eqs.push_back(x - y.scaled(image_point[1]));
    eqs.push_back(x * (one - x) - one.scaled(image_point[2]));
    SolutionSet sols = solve_square(SquareSystem(std::move(eqs)), config);

    double point_scale = 0.0;
    for (const auto& c : image_point) point_scale = std::max(point_scale, std::abs(c));
    double tol = 1e-8 * (1.0 + point_scale);

    std::vector<std::vector<Complex>> out;
    for (const auto& sol : sols.solutions) {
        Complex px = sol.point[0];
        Complex py = sol.point[1];
        if (std::abs(px) < 1e-10 || std::abs(py) < 1e-10) continue;
        if (std::abs(ipow(px, m) - image_point[0]) > tol) continue;
        if (std::abs(px * (Complex(1.0) - py) - image_point[3]) > tol) continue;
        out.push_back({px, py});
    }
    return out;
}

TorusModel glued_surface_model(int m, const TrackerConfig& config) {
    require_odd(m);
    std::vector<RatFun> q = image_coordinates(m);
    RatFun q5 = RatFun::constant(2, Rational(1)) - q[0] - q[1] - q[2] - q[3];
    std::vector<RatFun> coords{q[0], q[1], q[2], q[3], q5};

    std::vector<std::vector<Complex>> excluded;
    for (const auto& s : double_points(m)) {
        auto pre = parameter_preimages(m, s, config);
        if (pre.size() != 2)
            throw std::runtime_error("double point does not have exactly two parameter preimages");
        for (auto& p : pre) excluded.push_back(std::move(p));
    }
    return TorusModel::parametrized_model(5, {"x", "y"}, std::move(coords), {}, std::move(excluded));
}

TorusModel boundary_curve_model(int m) {
    require_odd(m);
    return TorusModel::parametrized_model(4, {"x", "y"}, image_coordinates(m),
                                          {boundary_curve_polynomial(m)});
}

bool boundary_curve_is_smooth(int m, const TrackerConfig& config) {
    require_odd(m);
    CxPoly h = to_complex_poly(boundary_curve_polynomial(m));
    CxPoly hx = h.differentiate(0);
    CxPoly hy = h.differentiate(1);

    // Singular points satisfy h = hx = hy = 0, so they all show up among the
    // finitely many solutions of {h, hx}; at each one hy is then evaluated.
    SolutionSet sols = solve_square(SquareSystem({h, hx}), config);
    if (!sols.fully_tracked()) return false;

    for (const auto& sol : sols.solutions) {
        Complex px = sol.point[0];
        Complex py = sol.point[1];
        double region = std::min(std::min(std::abs(px), std::abs(py)),
                                 std::min(std::abs(Complex(1.0) - px), std::abs(Complex(1.0) - py)));
        if (region < 1e-8) continue;  // outside the torus the model lives in
        std::vector<Complex> at{px, py};
        if (std::abs(hy.evaluate(at)) < 1e-6) return false;
    }
    return true;
}

long long image_euler_characteristic(int m) {
    require_odd(m);
    return (3 - m) / 2;
}

FamilyReport verify_family(int m, const TrackerConfig& config, int draws) {
    require_odd(m);
    config.validate();
    FamilyReport rep;
    rep.m = m;
    rep.double_point_count = (m - 1) / 2;
    rep.double_point_list = double_points(m);
    rep.double_points_certified = double_points_in_torus(m);

    // Fiber structure of the parametrization: each double point is hit twice,
    // generic image points once.
    bool fibers_ok = true;
    for (const auto& s : rep.double_point_list) {
        auto pre = parameter_preimages(m, s, config);
        if (pre.size() != 2) fibers_ok = false;
        for (auto& p : pre) rep.preimage_list.push_back(std::move(p));
    }
    std::vector<RatFun> q = image_coordinates(m);
    std::mt19937_64 rng(mix_seed(config.seed, 0xFA417ULL));
    for (int trial = 0; trial < 3 && fibers_ok; ++trial) {
        Complex px = std::polar(0.5 + 1.5 * canonical_double(rng), 2.0 * std::numbers::pi * canonical_double(rng));
        Complex py = std::polar(0.5 + 1.5 * canonical_double(rng), 2.0 * std::numbers::pi * canonical_double(rng));
        std::vector<Complex> at{px, py};
        std::vector<Complex> image;
        image.reserve(4);
        for (const auto& f : q) image.push_back(to_complex_fun(f).evaluate(at));
        auto pre = parameter_preimages(m, image, config);
        fibers_ok = pre.size() == 1 && std::abs(pre[0][0] - px) < 1e-6 && std::abs(pre[0][1] - py) < 1e-6;
    }
    rep.fibers_verified = fibers_ok;

    rep.surface_ml = ml_degree(glued_surface_model(m, config), config, draws);
    rep.boundary_ml = ml_degree(boundary_curve_model(m), config, draws);
    rep.boundary_smooth = boundary_curve_is_smooth(m, config);

    // The five-coordinate surface is the image surface minus the boundary
    // curve. Removing the curve subtracts its chi, and the curve is smooth of
    // dimension one, so its chi is minus its ML degree.
    rep.image_chi = image_euler_characteristic(m);
    rep.surface_chi = rep.image_chi + rep.boundary_ml.count;
    rep.ic_chi = rep.surface_chi + rep.double_point_count;
    rep.gap = rep.surface_ml.count - rep.surface_chi;
    rep.gap_matches_double_points = rep.gap == rep.double_point_count;
    rep.bound_holds = rep.ic_chi >= rep.surface_ml.count;
    rep.bound_tight = rep.ic_chi == rep.surface_ml.count;
    rep.certified = rep.surface_ml.certified && rep.boundary_ml.certified && rep.double_points_certified &&
                    rep.fibers_verified && rep.boundary_smooth;
    return rep;
}

}  // namespace mldeg
